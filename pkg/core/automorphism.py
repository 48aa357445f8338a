"""Automorphism groups, orbits and the induced action on edges."""

from __future__ import annotations

import logging
from functools import lru_cache

from config.settings import settings
from core.canonical import refine
from core.errors import CapacityError, GraphArgumentError
from core.models import AutomorphismGroup, EdgeLabeling, Graph, Permutation, VertexLabeling

logger = logging.getLogger(__name__)


def _search_order(g: Graph, color: list[int], cell_size: list[int]) -> list[int]:
    """Vertices in an order where each one sees many already-placed vertices."""
    remaining = set(range(g.order))
    placed: set[int] = set()
    order: list[int] = []
    while remaining:
        nxt = min(
            remaining,
            key=lambda v: (-len(g.neighbors(v) & placed), cell_size[color[v]], v),
        )
        order.append(nxt)
        placed.add(nxt)
        remaining.remove(nxt)
    return order


@lru_cache(maxsize=4096)
def _automorphisms(g: Graph, limit: int) -> AutomorphismGroup:
    n = g.order
    cells = refine(g, [list(range(n))])
    color = [0] * n
    for i, cell in enumerate(cells):
        for v in cell:
            color[v] = i
    cell_size = [len(c) for c in cells]
    order = _search_order(g, color, cell_size)

    images = [-1] * n
    used = [False] * n
    found: list[Permutation] = []

    def extend(i: int) -> None:
        if i == n:
            found.append(tuple(images))
            if len(found) > limit:
                raise CapacityError(f"Automorphism group exceeds cap {limit}", len(found) - 1)
            return
        v = order[i]
        for w in cells[color[v]]:
            if used[w]:
                continue
            if any(g.has_edge(v, u) != g.has_edge(w, images[u]) for u in order[:i]):
                continue
            images[v] = w
            used[w] = True
            extend(i + 1)
            used[w] = False
        images[v] = -1

    extend(0)
    logger.debug("Aut of order-%d graph has %d elements", n, len(found))
    return AutomorphismGroup(graph=g, elements=tuple(sorted(found)))


def automorphisms(g: Graph, cap: int | None = None) -> AutomorphismGroup:
    """All adjacency-preserving vertex bijections of g.

    Backtracking over the cells of the equitable refinement of g: a vertex
    may only map into its own cell, and every partial map must keep
    adjacency with the vertices already placed.

    Args:
        g: Graph to analyse.
        cap: Largest group order to materialise; defaults to settings.automorphism_cap.

    Returns:
        The group with elements in lexicographic order.

    Raises:
        CapacityError: If the group is larger than the cap.
    """
    return _automorphisms(g, settings.automorphism_cap if cap is None else cap)


def vertex_orbits(aut: AutomorphismGroup) -> list[list[int]]:
    """Orbit partition, each orbit sorted, orbits ordered by smallest member."""
    n = aut.graph.order
    orbit_of = [-1] * n
    out: list[list[int]] = []
    for v in range(n):
        if orbit_of[v] >= 0:
            continue
        orbit = sorted({sigma[v] for sigma in aut.elements})
        for x in orbit:
            orbit_of[x] = len(out)
        out.append(orbit)
    return out


def stabilizer(aut: AutomorphismGroup, v: int) -> list[Permutation]:
    """Elements fixing vertex v, in group order."""
    return [sigma for sigma in aut.elements if sigma[v] == v]


def induced_edge_permutation(sigma: Permutation, g: Graph) -> Permutation:
    """Permutation of g's sorted edge positions sending {u,v} to {sigma(u), sigma(v)}.

    Raises:
        GraphArgumentError: If sigma is not an automorphism of g.
    """
    if len(sigma) != g.order or sorted(sigma) != list(range(g.order)):
        raise GraphArgumentError(f"Not a permutation of 0..{g.order - 1}: {sigma}")
    try:
        return tuple(g.edge_position(sigma[u], sigma[v]) for u, v in g.edges)
    except GraphArgumentError:
        raise GraphArgumentError(f"{sigma} is not an automorphism of the graph") from None


def edge_action(aut: AutomorphismGroup) -> list[Permutation]:
    """Induced edge permutations for every group element, in group order."""
    return [induced_edge_permutation(sigma, aut.graph) for sigma in aut.elements]


def is_edge_action_faithful(aut: AutomorphismGroup) -> bool:
    """False iff some non-identity automorphism fixes every edge."""
    edge_identity = tuple(range(aut.graph.edge_count))
    return all(
        induced_edge_permutation(sigma, aut.graph) != edge_identity for sigma in aut.non_identity
    )


def preserves_vertex_labeling(sigma: Permutation, c: VertexLabeling) -> bool:
    if len(sigma) != len(c.labels):
        raise GraphArgumentError(
            f"Permutation of size {len(sigma)} against {len(c.labels)} vertex labels"
        )
    return all(c.labels[x] == c.labels[sigma[x]] for x in range(len(sigma)))


def preserves_edge_labeling(sigma: Permutation, g: Graph, c: EdgeLabeling) -> bool:
    if len(sigma) != g.order or len(c.labels) != g.edge_count:
        raise GraphArgumentError("Permutation, graph and edge labeling sizes disagree")
    edge_perm = induced_edge_permutation(sigma, g)
    return all(c.labels[i] == c.labels[edge_perm[i]] for i in range(g.edge_count))
