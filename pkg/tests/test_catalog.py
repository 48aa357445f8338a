"""Tests for the named-graph catalog."""

from __future__ import annotations

import pytest

from config.settings import apply_overrides
from core.automorphism import automorphisms
from core.canonical import are_isomorphic
from core.errors import CatalogError
from core.families import complete_bipartite, cycle, spider
from core.linegraph import line_graph
from data import catalog


class TestGet:
    @pytest.mark.parametrize(
        "name, order, edges",
        [
            ("complete(5)", 5, 10),
            ("path(4)", 4, 3),
            ("cycle(6)", 6, 6),
            ("star(3)", 4, 3),
            ("complete_bipartite(2,3)", 5, 6),
            ("spider(1,2,3)", 7, 6),
            (" cycle( 5 ) ", 5, 5),
        ],
    )
    def test_families(self, name, order, edges):
        """Family expressions parse, tolerating surrounding whitespace."""
        g = catalog.get(name)
        assert (g.order, g.edge_count) == (order, edges)

    def test_family_matches_constructor(self):
        """Catalog families build the same graph as the constructors."""
        assert catalog.get("complete_bipartite(3,3)") == complete_bipartite(3, 3)
        assert catalog.get("spider(2,2)") == spider([2, 2])

    def test_petersen(self):
        """The stored Petersen graph is cubic with 120 automorphisms."""
        g = catalog.get("petersen")
        assert g.order == 10
        assert set(g.degrees) == {3}
        assert automorphisms(g).order == 120

    def test_octahedron_is_line_graph_of_k4(self):
        """The stored octahedron is L(K4)."""
        k4_line = line_graph(catalog.get("complete(4)")).line
        assert are_isomorphic(catalog.get("octahedron"), k4_line)

    @pytest.mark.parametrize(
        "name", ["dodecahedron", "cycle", "cycle(5,6)", "wheel(5)", "spider()"]
    )
    def test_unknown_or_malformed(self, name):
        """Bad names raise with the list of valid names attached."""
        with pytest.raises(CatalogError) as exc:
            catalog.get(name)
        assert "petersen" in exc.value.valid_names
        assert "cycle(n)" in exc.value.valid_names

    def test_bad_family_arguments(self):
        """Arguments outside a family's range raise a catalog error."""
        with pytest.raises(CatalogError):
            catalog.get("cycle(2)")

    def test_missing_catalog_file(self, tmp_path):
        """Without the YAML file families still work but named graphs do not."""
        apply_overrides(catalog_path=tmp_path / "missing.yaml")
        assert catalog.get("cycle(4)") == cycle(4)
        with pytest.raises(CatalogError):
            catalog.get("petersen")

    def test_malformed_catalog_file(self, tmp_path):
        """An entry that fails validation raises a catalog error."""
        bad = tmp_path / "bad.yaml"
        bad.write_text("broken:\n  order: 3\n")
        apply_overrides(catalog_path=bad)
        with pytest.raises(CatalogError):
            catalog.get("broken")


class TestListing:
    def test_families_then_named(self):
        """Families are listed first, then the named graphs with their orders."""
        entries = catalog.list_catalog()
        names = [e.name for e in entries]
        assert names[:6] == [
            "complete(n)",
            "complete_bipartite(p,q)",
            "cycle(n)",
            "path(n)",
            "spider(l1,l2,...)",
            "star(n)",
        ]
        assert "petersen" in names
        assert next(e for e in entries if e.name == "star(n)").order == "n+1"
        assert next(e for e in entries if e.name == "octahedron").order == 6

    def test_beineke_graphs(self):
        """The nine forbidden subgraphs load, the claw first."""
        beineke = catalog.beineke_graphs()
        assert len(beineke) == 9
        assert are_isomorphic(beineke[0], catalog.get("star(3)"))
