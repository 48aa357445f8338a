"""Tests for canonical forms, isomorphism testing and refinement."""

from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from config.settings import apply_overrides
from core.canonical import are_isomorphic, canonical_form, canonical_graph, refine
from core.errors import SizeLimitError
from core.families import complete_bipartite, cycle, path
from core.graph_ops import from_networkx, to_networkx
from core.models import Graph
from tests.oracles import graphs, graphs_with_relabeling


class TestCanonicalForm:
    @given(graphs_with_relabeling(max_order=8))
    def test_invariant_under_relabeling(self, case):
        """Relabeling a graph does not change its canonical form."""
        g, perm = case
        assert canonical_form(g) == canonical_form(g.relabel(perm))

    @given(graphs(max_order=7), graphs(max_order=7))
    def test_agrees_with_networkx(self, a, b):
        """Equal forms exactly when networkx finds the graphs isomorphic."""
        expected = nx.is_isomorphic(to_networkx(a), to_networkx(b))
        assert (canonical_form(a) == canonical_form(b)) == expected
        assert are_isomorphic(a, b) == expected

    def test_petersen_relabeled(self, petersen):
        """A scrambled Petersen graph is recognised as Petersen."""
        perm = (3, 7, 1, 9, 0, 5, 2, 8, 6, 4)
        assert are_isomorphic(petersen, petersen.relabel(perm))

    def test_petersen_is_kneser_5_2(self, petersen):
        """Petersen as the disjointness graph of the 2-subsets of a 5-set."""
        kneser = nx.Graph()
        pairs = list(combinations(range(5), 2))
        kneser.add_nodes_from(pairs)
        kneser.add_edges_from((a, b) for a, b in combinations(pairs, 2) if not set(a) & set(b))
        assert are_isomorphic(petersen, from_networkx(kneser))

    def test_same_degree_sequence_not_isomorphic(self):
        """C6 and two disjoint triangles are both 2-regular on six vertices."""
        two_triangles = Graph(order=6, edges=[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not are_isomorphic(cycle(6), two_triangles)

    def test_k33_against_prism(self):
        """K33 and the prism are cubic on six vertices but differ."""
        prism = Graph(
            order=6, edges=[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
        )
        assert not are_isomorphic(complete_bipartite(3, 3), prism)

    def test_empty_graph(self):
        """The empty graph has a fixed form."""
        assert canonical_form(Graph(order=0)) == b"0:"

    def test_order_cap(self):
        """Graphs above the configured order are refused."""
        apply_overrides(canonical_max_order=5)
        with pytest.raises(SizeLimitError):
            canonical_form(path(6))


class TestCanonicalGraph:
    @given(graphs_with_relabeling(max_order=7))
    def test_representative_is_shared(self, case):
        """Isomorphic inputs share one representative isomorphic to both."""
        g, perm = case
        rep = canonical_graph(g)
        assert rep == canonical_graph(g.relabel(perm))
        assert are_isomorphic(rep, g)


class TestRefine:
    def test_splits_by_degree(self, paw):
        """Refinement separates the paw by degree."""
        cells = refine(paw, [[0, 1, 2, 3]])
        assert sorted(map(sorted, cells)) == [[0, 1], [2], [3]]

    def test_regular_graph_stays_whole(self, petersen):
        """A vertex-transitive graph stays in one cell."""
        assert refine(petersen, [list(range(10))]) == [list(range(10))]

    def test_path_splits_to_orbits(self):
        """P5 refines to its reversal orbits."""
        cells = refine(path(5), [list(range(5))])
        assert sorted(map(sorted, cells)) == [[0, 4], [1, 3], [2]]
