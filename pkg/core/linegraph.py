"""Line graphs, the lift of automorphisms to line graphs, and line-graph
recognition (forbidden induced subgraphs, odd triangles, root search)."""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations

from config.settings import settings
from core.automorphism import automorphisms, induced_edge_permutation
from core.canonical import canonical_form
from core.enumeration import enumerate_connected_by_size
from core.errors import GraphArgumentError, SizeLimitError
from core.families import star
from core.graph_ops import contains_induced
from core.models import AutomorphismGroup, Graph, LineGraphResult, Permutation
from data.catalog import beineke_graphs

logger = logging.getLogger(__name__)

CLAW = star(3)


def line_graph(g: Graph) -> LineGraphResult:
    """L(g): one vertex per edge of g (in sorted edge order), adjacent when
    the edges share an endpoint."""
    edge_index = {e: i for i, e in enumerate(g.edges)}
    line_edges = []
    for v in range(g.order):
        incident = sorted(edge_index[(min(v, u), max(v, u))] for u in g.neighbors(v))
        line_edges.extend(combinations(incident, 2))
    return LineGraphResult(line=Graph(order=g.edge_count, edges=line_edges), edge_index=edge_index)


def gamma_lift(g: Graph, aut: AutomorphismGroup) -> dict[Permutation, Permutation]:
    """Each automorphism of g with its induced automorphism of L(g).

    Raises:
        GraphArgumentError: If an element of aut is not an automorphism of g.
    """
    line = line_graph(g).line
    lift: dict[Permutation, Permutation] = {}
    for sigma in aut.elements:
        image = induced_edge_permutation(sigma, g)
        if not all(line.has_edge(image[a], image[b]) for a, b in line.edges):
            raise GraphArgumentError(f"Lift of {sigma} does not preserve L(G)")
        lift[sigma] = image
    return lift


def gamma_is_isomorphism(g: Graph) -> bool:
    """True iff the lift Aut(g) -> Aut(L(g)) is injective and both groups have
    the same order (the images are automorphisms, so that makes it onto)."""
    aut = automorphisms(g)
    lift = gamma_lift(g, aut)
    injective = len(set(lift.values())) == aut.order
    return injective and aut.order == automorphisms(line_graph(g).line).order


def is_claw_free(g: Graph) -> bool:
    return not contains_induced(g, CLAW)


def is_line_graph(g: Graph) -> bool:
    """True iff none of the nine Beineke graphs is an induced subgraph of g."""
    return not any(contains_induced(g, b) for b in beineke_graphs())


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    return [
        (a, b, c)
        for a, b in g.edges
        for c in sorted(g.neighbors(a) & g.neighbors(b))
        if c > b
    ]


def _is_odd_triangle(g: Graph, tri: tuple[int, int, int]) -> bool:
    members = set(tri)
    return any(
        len(g.neighbors(x) & members) % 2 == 1 for x in range(g.order) if x not in members
    )


def satisfies_odd_triangle_condition(g: Graph) -> bool:
    """Whenever two odd triangles abc and bcd share the edge bc, a ~ d.

    A triangle is odd when some vertex outside it is adjacent to an odd
    number of its vertices.
    """
    odd = [set(t) for t in _triangles(g) if _is_odd_triangle(g, t)]
    for s, t in combinations(odd, 2):
        shared = s & t
        if len(shared) == 2:
            (a,) = s - shared
            (d,) = t - shared
            if not g.has_edge(a, d):
                return False
    return True


def is_line_graph_by_triangles(g: Graph) -> bool:
    """Line-graph test via claw-freeness plus the odd-triangle condition."""
    return is_claw_free(g) and satisfies_odd_triangle_condition(g)


@lru_cache(maxsize=None)
def _roots_by_line_form(edge_count: int) -> dict[bytes, Graph]:
    """Canonical form of L(H) -> first H, for connected H with edge_count edges."""
    roots: dict[bytes, Graph] = {}
    for h in enumerate_connected_by_size(edge_count):
        roots.setdefault(canonical_form(line_graph(h).line), h)
    return roots


def root_graph_oracle(g: Graph, max_order: int | None = None) -> Graph | None:
    """Some connected H with L(H) isomorphic to g, by exhaustive search.

    Candidates are all connected graphs with as many edges as g has
    vertices; such graphs have at most one more vertex than that.

    Raises:
        SizeLimitError: If g is larger than settings.root_oracle_max_order.
    """
    limit = settings.root_oracle_max_order if max_order is None else max_order
    if g.order > limit:
        raise SizeLimitError(f"Root search supports order <= {limit}, got {g.order}")
    if g.order == 0:
        return Graph(order=1)
    return _roots_by_line_form(g.order).get(canonical_form(g))
