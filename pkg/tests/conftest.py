"""Shared test fixtures for symbreak."""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck
from hypothesis import settings as hypothesis_settings

from config.settings import apply_overrides, settings
from core.families import complete, complete_bipartite, cycle, path, spider, star
from core.models import Graph, GraphoidalCover, GraphoidalPath
from data import catalog

# Edgeless draws list up to 7! automorphisms; no per-example deadline.
hypothesis_settings.register_profile(
    "symbreak", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
hypothesis_settings.load_profile("symbreak")


@pytest.fixture(autouse=True)
def restore_settings():
    """Undo any settings the test (or a CLI run inside it) changed."""
    snapshot = settings.model_dump()
    yield
    apply_overrides(**snapshot)


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def p4() -> Graph:
    return path(4)


@pytest.fixture
def claw() -> Graph:
    return star(3)


@pytest.fixture
def k33() -> Graph:
    return complete_bipartite(3, 3)


@pytest.fixture
def paw() -> Graph:
    """Triangle 0-1-2 with pendant vertex 3 at 2."""
    return Graph(order=4, edges=[(0, 1), (0, 2), (1, 2), (2, 3)])


@pytest.fixture
def diamond() -> Graph:
    """K4 minus the edge 0-3."""
    return Graph(order=4, edges=[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def petersen() -> Graph:
    return catalog.get("petersen")


@pytest.fixture
def double_star() -> Graph:
    """Two adjacent centers 0 and 1, each with two leaves."""
    return Graph(order=6, edges=[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


@pytest.fixture
def asymmetric_tree() -> Graph:
    """Spider with legs 1, 2, 3: the smallest asymmetric tree."""
    return spider([1, 2, 3])


@pytest.fixture
def p4_edge_cover() -> tuple[Graph, GraphoidalCover]:
    """P4 covered by its three edges."""
    g = path(4)
    cover = GraphoidalCover(paths=tuple(GraphoidalPath(vertices=e) for e in g.edges))
    return g, cover


@pytest.fixture
def twisted_paw() -> tuple[Graph, GraphoidalCover]:
    """Triangle 1-2-3 with pendant 0 at 3, covered by (0,3,1) and (1,2,3).

    Swapping 1 and 2 survives both tuple labelings built from either
    labeling of Omega = K2.
    """
    g = Graph(order=4, edges=[(0, 3), (1, 2), (1, 3), (2, 3)])
    cover = GraphoidalCover(
        paths=(GraphoidalPath(vertices=(0, 3, 1)), GraphoidalPath(vertices=(1, 2, 3)))
    )
    return g, cover
