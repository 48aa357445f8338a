"""Tests for graphoidal covers, their intersection graphs and the constructions."""

from __future__ import annotations

import logging

import pytest

from config.settings import apply_overrides
from core.automorphism import automorphisms, preserves_edge_labeling
from core.canonical import are_isomorphic
from core.distinguishing import (
    distinguishing_index,
    distinguishing_number,
    is_distinguishing_edge,
)
from core.errors import (
    CapacityError,
    CoverError,
    CoverValidationError,
    GraphArgumentError,
    SizeLimitError,
)
from core.enumeration import enumerate_connected_graphs
from core.families import complete, cycle, path, spider, star
from core.graphoidal import (
    construct_cycle_instances,
    construct_gap_instance,
    construct_open_sharpness_example,
    construct_spider_instance,
    constructive_edge_labeling,
    enumerate_covers,
    interior_vertices,
    omega,
    omega_spectrum,
    repair_constructive_labeling,
    single_edge_cover,
    validate_cover,
    verify_graphoidal_bounds,
)
from core.linegraph import line_graph
from core.models import Graph, GraphoidalCover, GraphoidalPath, VertexLabeling
from data.cover_format import format_cover, parse_cover, read_cover_file, write_cover_file
from tests.oracles import naive_cover_count


def _cover(*paths: tuple[int, ...]) -> GraphoidalCover:
    return GraphoidalCover(paths=tuple(GraphoidalPath(vertices=p) for p in paths))


class TestValidateCover:
    def test_edge_cover_is_valid(self, p4_edge_cover):
        """The single-edge cover of P4 is valid."""
        g, psi = p4_edge_cover
        assert validate_cover(g, psi).ok

    def test_shared_edge(self, p4):
        """Two paths through one edge break the edge-disjointness condition."""
        check = validate_cover(p4, _cover((0, 1, 2), (1, 2, 3)))
        assert [v.condition for v in check.violations] == ["iii"]
        assert check.violations[0].edge == (1, 2)
        assert check.violations[0].paths == (0, 1)

    def test_vertex_internal_twice(self):
        """A vertex internal to two paths breaks the interior condition."""
        check = validate_cover(star(4), _cover((1, 0, 2), (3, 0, 4)))
        assert [v.condition for v in check.violations] == ["ii"]
        assert check.violations[0].vertex == 0

    def test_uncovered_edge(self, p4):
        """An edge on no path is reported."""
        check = validate_cover(p4, _cover((0, 1), (1, 2)))
        assert not check.ok
        assert check.violations[0].edge == (2, 3)
        assert "not covered" in check.violations[0].message

    def test_every_violation_reported(self, p4):
        """All violations come back, not just the first."""
        check = validate_cover(p4, _cover((0, 1, 2), (1, 2)))
        assert {v.condition for v in check.violations} == {"iii"}
        assert len(check.violations) == 2

    def test_non_edge_step(self, p4):
        """A path stepping along a non-edge is malformed."""
        with pytest.raises(CoverError):
            validate_cover(p4, _cover((0, 2)))

    def test_vertex_out_of_range(self, p4):
        """Paths may only use vertices of the host."""
        with pytest.raises(CoverError):
            validate_cover(p4, _cover((3, 4)))

    def test_closed_path(self):
        """A closed triangle covers K3 with its terminal as the only non-interior vertex."""
        psi = _cover((0, 1, 2, 0))
        assert validate_cover(complete(3), psi).ok
        assert psi.paths[0].closed
        assert psi.paths[0].internal_vertices == {1, 2}
        assert not psi.all_open

    def test_interior_vertices(self, p4):
        """Interior vertices of a split path cover and of the edge cover."""
        assert interior_vertices(_cover((0, 1, 2), (2, 3))) == {1}
        assert interior_vertices(single_edge_cover(p4)) == frozenset()


class TestOmega:
    def test_edge_cover_of_p4(self, p4_edge_cover):
        """Omega of the edge cover of P4 is P3."""
        g, psi = p4_edge_cover
        assert are_isomorphic(omega(g, psi), path(3))

    def test_invalid_cover_rejected(self, p4):
        """Omega refuses invalid covers and carries the violations."""
        with pytest.raises(CoverValidationError) as exc:
            omega(p4, _cover((0, 1), (1, 2)))
        assert exc.value.violations

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_edge_cover_gives_line_graph(self, n):
        """Omega of the single-edge cover is the line graph."""
        for g in enumerate_connected_graphs(n):
            assert are_isomorphic(omega(g, single_edge_cover(g)), line_graph(g).line)

    def test_single_path(self):
        """A cover by one path gives K1."""
        assert omega(path(5), _cover(tuple(range(5)))) == Graph(order=1)

    def test_duplicate_vertex_sets_warned(self, k4, caplog):
        """Two Hamiltonian paths of K4 share all four vertices."""
        psi = _cover((0, 1, 2, 3), (1, 3, 0, 2))
        with caplog.at_level(logging.WARNING, logger="core.graphoidal"):
            om = omega(k4, psi)
        assert om == complete(2)
        assert "same vertex set" in caplog.text

    def test_duplicate_vertex_sets_quiet_in_scans(self, k4, caplog):
        """Scans pass warn_duplicates=False, which drops the message to debug level."""
        psi = _cover((0, 1, 2, 3), (1, 3, 0, 2))
        with caplog.at_level(logging.WARNING, logger="core.graphoidal"):
            omega(k4, psi, warn_duplicates=False)
            verify_graphoidal_bounds(k4, psi)
        assert "same vertex set" not in caplog.text


class TestEnumerateCovers:
    def test_p3(self):
        """P3 has two covers: the whole path and its two edges."""
        assert len(enumerate_covers(path(3))) == 2

    def test_triangle(self):
        """One all-edges cover, three path splits, three closed-path terminals."""
        covers = enumerate_covers(complete(3))
        assert len(covers) == 7
        closed = [psi for psi in covers if not psi.all_open]
        assert len(closed) == 3
        assert {psi.paths[0].vertices[0] for psi in closed} == {0, 1, 2}

    def test_claw(self, claw):
        """The claw has four covers, matching the naive count."""
        assert len(enumerate_covers(claw)) == naive_cover_count(claw) == 4

    @pytest.mark.parametrize(
        "graph",
        [path(5), cycle(4), cycle(5), complete(4), star(4)],
        ids=["P5", "C4", "C5", "K4", "K14"],
    )
    def test_matches_naive_count(self, graph):
        """Cover counts agree with splitting edge sets into paths by brute force."""
        assert len(enumerate_covers(graph)) == naive_cover_count(graph)

    def test_paw_and_diamond(self, paw, diamond):
        """Counts agree with brute force on the paw and diamond."""
        assert len(enumerate_covers(paw)) == naive_cover_count(paw)
        assert len(enumerate_covers(diamond)) == naive_cover_count(diamond)

    def test_every_cover_valid_and_distinct(self, k4):
        """Every enumerated cover of K4 is valid and none repeats."""
        covers = enumerate_covers(k4)
        for psi in covers:
            assert validate_cover(k4, psi).ok
        keys = {frozenset(p.canonical() for p in psi.paths) for psi in covers}
        assert len(keys) == len(covers)

    def test_deterministic(self, diamond):
        """Enumeration order is reproducible."""
        assert enumerate_covers(diamond) == enumerate_covers(diamond)

    def test_edgeless_host(self):
        """An edgeless graph has only the empty cover."""
        assert enumerate_covers(Graph(order=2)) == [GraphoidalCover(paths=())]

    def test_count_cap(self):
        """The cover cap raises with the number found."""
        with pytest.raises(CapacityError) as exc:
            enumerate_covers(complete(3), cap=5)
        assert exc.value.partial_count == 5

    def test_edge_cap(self):
        """Hosts above the edge cap are refused."""
        with pytest.raises(SizeLimitError):
            enumerate_covers(complete(5), edge_cap=9)
        apply_overrides(cover_edge_cap=2)
        with pytest.raises(SizeLimitError):
            enumerate_covers(path(4))


class TestOmegaSpectrum:
    def test_p3(self):
        """The two covers of P3 give K1 and K2, once each."""
        spectrum = omega_spectrum(path(3))
        assert [(g.order, count) for g, count in spectrum] == [(1, 1), (2, 1)]

    def test_counts_sum_to_cover_count(self, diamond):
        """The spectrum counts every cover once, with distinct Omega classes."""
        spectrum = omega_spectrum(diamond)
        assert sum(count for _, count in spectrum) == len(enumerate_covers(diamond))
        for i, (a, _) in enumerate(spectrum):
            for b, _ in spectrum[i + 1 :]:
                assert not are_isomorphic(a, b)


class TestConstructions:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_gap_instance(self, n):
        """The gap instance has Omega a star and D = D' = 2 on the host."""
        inst = construct_gap_instance(n)
        g, psi = inst.graph, inst.cover
        assert g.order == 2 * n + 2
        om = omega(g, psi)
        assert are_isomorphic(om, star(n))
        assert distinguishing_number(g) == distinguishing_index(g) == 2
        assert distinguishing_number(om) == distinguishing_index(om) == n

    def test_gap_instance_needs_two(self):
        """The gap construction needs n >= 2."""
        with pytest.raises(GraphArgumentError):
            construct_gap_instance(1)

    @pytest.mark.parametrize("x, p", [(2, 1), (3, 1), (2, 2), (4, 2), (5, 2)])
    def test_spider_instance(self, x, p):
        """Omega is the spider with x legs of length p and the expected index."""
        inst = construct_spider_instance(x, p, 1, 2)
        om = omega(inst.graph, inst.cover)
        assert are_isomorphic(om, spider([p] * x))
        expected = next(d for d in range(1, x + 1) if d**p >= x)
        assert distinguishing_index(om) == expected
        assert inst.notes["host_order"] == inst.graph.order

    @pytest.mark.parametrize(
        "args", [(1, 1, 1, 2), (2, 1, 2, 2), (0, 1, 1, 2), (2, 1, 0, 1)]
    )
    def test_spider_rejects_bad_parameters(self, args):
        """Parameters outside the construction's range are rejected."""
        with pytest.raises(GraphArgumentError):
            construct_spider_instance(*args)

    def test_cycle_instances(self):
        """Closed-cycle covers give K1 and hosts with D' = 3."""
        instances = {inst.name: inst for inst in construct_cycle_instances()}
        assert set(instances) == {
            "cycle-closed-3",
            "cycle-closed-4",
            "cycle-closed-5",
            "cycle-edges-3",
        }
        for i in (3, 4, 5):
            inst = instances[f"cycle-closed-{i}"]
            assert omega(inst.graph, inst.cover) == Graph(order=1)
            assert distinguishing_index(inst.graph) == 3
        edges = instances["cycle-edges-3"]
        assert are_isomorphic(omega(edges.graph, edges.cover), complete(3))

    def test_open_sharpness_example(self):
        """An all-open cover where host and Omega are both asymmetric."""
        inst = construct_open_sharpness_example()
        assert inst.cover.all_open
        assert validate_cover(inst.graph, inst.cover).ok
        assert distinguishing_index(inst.graph) == 1
        assert distinguishing_number(omega(inst.graph, inst.cover)) == 1


class TestConstructiveLabeling:
    def test_triangle_edges(self):
        """Single edges just copy the Omega labels; the range is r + 2."""
        g = complete(3)
        labeling = constructive_edge_labeling(
            g, single_edge_cover(g), VertexLabeling(labels=(1, 2, 3), r=3), open_only=False
        )
        assert labeling.labels == (1, 2, 3)
        assert labeling.d == 5

    def test_schemes_on_long_path(self):
        """Second edges get t+1; later edges t+2 or, in the open scheme, t+1."""
        g = path(5)
        psi = _cover((0, 1, 2, 3, 4))
        c = VertexLabeling(labels=(1,), r=1)
        general = constructive_edge_labeling(g, psi, c, open_only=False)
        opened = constructive_edge_labeling(g, psi, c, open_only=True)
        assert general.labels == (1, 2, 3, 3)
        assert opened.labels == (1, 2, 2, 2)
        assert (general.d, opened.d) == (3, 2)

    def test_non_distinguishing_labeling(self):
        """The Omega labeling must be distinguishing."""
        g = complete(3)
        with pytest.raises(GraphArgumentError):
            constructive_edge_labeling(
                g, single_edge_cover(g), VertexLabeling(labels=(1, 1, 2), r=2), open_only=False
            )

    def test_wrong_length(self):
        """The Omega labeling must have one label per path."""
        g = complete(3)
        with pytest.raises(GraphArgumentError):
            constructive_edge_labeling(
                g, single_edge_cover(g), VertexLabeling(labels=(1, 2), r=2), open_only=False
            )

    def test_open_scheme_needs_open_paths(self):
        """The open scheme is only defined when every path is open."""
        with pytest.raises(GraphArgumentError):
            constructive_edge_labeling(
                complete(3), _cover((0, 1, 2, 0)), VertexLabeling(labels=(1,), r=1), open_only=True
            )

    def test_closed_path_read_both_ways(self):
        """C4 as one closed path: both directions from the terminal label differently
        and both break every symmetry."""
        g = cycle(4)
        psi = _cover((0, 1, 2, 3, 0))
        c = VertexLabeling(labels=(1,), r=1)
        forward = constructive_edge_labeling(g, psi, c, open_only=False)
        backward = constructive_edge_labeling(g, psi, c, open_only=False, reversed_paths=[0])
        # edge order (0,1), (0,3), (1,2), (2,3)
        assert forward.labels == (1, 3, 2, 3)
        assert backward.labels == (3, 1, 3, 2)
        aut = automorphisms(g)
        assert is_distinguishing_edge(g, forward, aut)
        assert is_distinguishing_edge(g, backward, aut)

    def test_reversed_open_path(self):
        """Reading P5 from vertex 4 puts the Omega label on the last edge."""
        g = path(5)
        c = VertexLabeling(labels=(1,), r=1)
        labeling = constructive_edge_labeling(
            g, _cover((0, 1, 2, 3, 4)), c, open_only=True, reversed_paths={0}
        )
        assert labeling.labels == (2, 2, 2, 1)

    def test_reversed_index_out_of_range(self):
        """Reversed path indices must name a path of the cover."""
        g = path(3)
        with pytest.raises(GraphArgumentError, match="outside"):
            constructive_edge_labeling(
                g, _cover((0, 1, 2)), VertexLabeling(labels=(1,), r=1), False, reversed_paths=[1]
            )


class TestTupleLabelingCounterexamples:
    def test_gap_instance_leaf_swap_survives(self):
        """With Omega labels (1,1,2,3) the spine and the first pendant both start
        with label 1, so swapping vertices 0 and 5 preserves the open labeling."""
        inst = construct_gap_instance(3)
        c = VertexLabeling(labels=(1, 1, 2, 3), r=3)
        labeling = constructive_edge_labeling(inst.graph, inst.cover, c, open_only=True)
        assert labeling.labels == (1, 4, 1, 4, 2, 4, 3)
        assert preserves_edge_labeling((5, 1, 2, 3, 4, 0, 6, 7), inst.graph, labeling)
        assert not is_distinguishing_edge(inst.graph, labeling, automorphisms(inst.graph))

    def test_paw_fails_both_schemes(self, twisted_paw):
        """The 1-2 swap maps the second edge of one path onto the second edge
        of the other, and both carry t+1."""
        g, psi = twisted_paw
        aut = automorphisms(g)
        for c in (VertexLabeling(labels=(1, 2), r=2), VertexLabeling(labels=(2, 1), r=2)):
            for open_only in (False, True):
                labeling = constructive_edge_labeling(g, psi, c, open_only=open_only)
                assert not is_distinguishing_edge(g, labeling, aut)

    def test_paw_repaired_by_reversing_a_path(self, twisted_paw):
        """Reversing one path gives a distinguishing labeling within r + 2 labels."""
        g, psi = twisted_paw
        repair = repair_constructive_labeling(g, psi, open_only=False)
        assert repair is not None
        assert repair.reversed_paths
        assert max(repair.labeling.labels) <= 2 + 2
        assert is_distinguishing_edge(g, repair.labeling, automorphisms(g))

    def test_gap_instance_repaired_within_open_budget(self):
        """The gap instance repairs with r + 1 labels."""
        inst = construct_gap_instance(3)
        repair = repair_constructive_labeling(inst.graph, inst.cover, open_only=True)
        assert repair is not None
        assert repair.labeling.d == 4
        assert is_distinguishing_edge(inst.graph, repair.labeling, automorphisms(inst.graph))
        assert distinguishing_number(omega(inst.graph, inst.cover)) == 3

    def test_repair_respects_cap(self, twisted_paw):
        """One attempt only reaches the first Omega candidate, which is not distinguishing."""
        g, psi = twisted_paw
        assert repair_constructive_labeling(g, psi, open_only=False, cap=1) is None

    def test_open_repair_needs_open_paths(self):
        """The open scheme cannot be repaired on a cover with a closed path."""
        with pytest.raises(GraphArgumentError):
            repair_constructive_labeling(complete(3), _cover((0, 1, 2, 0)), open_only=True)

    def test_repair_cap_from_settings(self, twisted_paw):
        """The configured cap applies when none is passed."""
        apply_overrides(scheme_repair_cap=1)
        g, psi = twisted_paw
        assert repair_constructive_labeling(g, psi, open_only=True) is None


class TestGraphoidalBounds:
    def test_triangle_edge_cover(self):
        """Omega of the triangle's edge cover is K3; the index bounds do not apply."""
        g = complete(3)
        report = verify_graphoidal_bounds(g, single_edge_cover(g))
        assert report.number_omega == 3 == report.cover_size
        assert report.upper_bound_holds
        assert not report.index_bounds_apply
        assert report.passed

    def test_closed_square(self):
        report = verify_graphoidal_bounds(cycle(4), _cover((0, 1, 2, 3, 0)))
        assert report.index_g == 3
        assert report.number_omega == 1
        assert report.lower_bound_holds
        assert not report.index_bounds_apply
        assert report.open_bound_holds is None
        assert report.general_scheme_ok and report.general_scheme_reversed_ok
        assert report.passed

    def test_gap_instance(self):
        """Bounds hold; both tuple labelings fail on the leaf swap and both are repaired."""
        inst = construct_gap_instance(3)
        report = verify_graphoidal_bounds(inst.graph, inst.cover)
        assert report.index_bounds_apply
        assert report.index_omega == 3 == report.cover_size - 1
        assert report.index_equality_observed and report.index_equality_predicted
        assert report.scheme_failures == ["general_scheme_ok", "open_scheme_ok"]
        assert report.general_scheme_repaired and report.open_scheme_repaired
        assert report.general_scheme_reversed_ok is None
        assert report.passed

    def test_paw_counterexample_reported_not_failed(self, twisted_paw):
        g, psi = twisted_paw
        report = verify_graphoidal_bounds(g, psi)
        assert report.index_g == 2 == report.number_omega
        assert report.general_scheme_ok is False
        assert report.open_scheme_ok is False
        assert report.general_scheme_repaired and report.open_scheme_repaired
        assert report.passed

    def test_undefined_host_index(self):
        """With D'(G) undefined the lower bound is not evaluated."""
        report = verify_graphoidal_bounds(complete(2), _cover((0, 1)))
        assert report.index_g is None
        assert report.lower_bound_holds is None
        assert report.passed

    @pytest.mark.parametrize("n", [3, 4])
    def test_all_covers_of_small_graphs(self, n):
        """Every cover of every connected graph on 3 or 4 vertices passes."""
        for g in enumerate_connected_graphs(n):
            for psi in enumerate_covers(g):
                assert verify_graphoidal_bounds(g, psi).passed


class TestCoverFormat:
    def test_parse(self):
        """Comments and blank lines are skipped; a repeated end closes a path."""
        psi = parse_cover("# spine\n0,1,2\n\n2,3  # pendant\n0,4,5,0\n")
        assert [p.vertices for p in psi.paths] == [(0, 1, 2), (2, 3), (0, 4, 5, 0)]
        assert psi.paths[2].closed

    def test_format(self):
        """Formatting writes one comma-separated path per line."""
        assert format_cover(_cover((0, 1, 2), (2, 3))) == "0,1,2\n2,3\n"

    @pytest.mark.parametrize("text", ["0,x\n", "0\n", "0,1,0\n", "0,1,2,1\n"])
    def test_errors(self, text):
        """Bad tokens, single vertices and repeats are rejected."""
        with pytest.raises(CoverError):
            parse_cover(text)

    def test_file_round_trip(self, tmp_path):
        """A cover written to a file reads back unchanged."""
        inst = construct_gap_instance(4)
        target = tmp_path / "gap.cover"
        write_cover_file(inst.cover, target)
        assert read_cover_file(target) == inst.cover
