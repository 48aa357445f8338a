"""Structural operations on Graph values: networkx conversion, connectivity,
induced subgraphs, distances and induced-subgraph containment."""

from __future__ import annotations

import logging
from collections.abc import Hashable, Iterable

import networkx as nx

from core.errors import GraphArgumentError
from core.models import Graph

logger = logging.getLogger(__name__)


def to_networkx(g: Graph) -> nx.Graph:
    """networkx copy of g with nodes 0..order-1 inserted in order."""
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges)
    return h


def from_networkx(h: nx.Graph) -> Graph:
    """Graph on 0..n-1, numbering the nodes of h in sorted order.

    Raises:
        GraphArgumentError: If h has a self-loop or its nodes do not sort.
    """
    try:
        nodes: list[Hashable] = sorted(h.nodes)
    except TypeError as exc:
        raise GraphArgumentError(f"Node labels must be mutually comparable: {exc}") from exc
    if nx.number_of_selfloops(h):
        raise GraphArgumentError("Simple graphs only: self-loop found")
    index = {v: i for i, v in enumerate(nodes)}
    return Graph(order=len(index), edges=[(index[u], index[v]) for u, v in h.edges])


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from source; -1 for unreachable vertices."""
    reached = nx.single_source_shortest_path_length(to_networkx(g), source)
    return [reached.get(v, -1) for v in range(g.order)]


def is_connected(g: Graph) -> bool:
    """K0 and K1 count as connected."""
    if g.order <= 1:
        return True
    return nx.is_connected(to_networkx(g))


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    return sorted(sorted(c) for c in nx.connected_components(to_networkx(g)))


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    """Subgraph induced by vs, relabelled 0..|vs|-1 in increasing vertex order.

    Raises:
        GraphArgumentError: If a vertex is outside 0..order-1.
    """
    chosen = sorted(set(vs))
    for v in chosen:
        if not 0 <= v < g.order:
            raise GraphArgumentError(f"Vertex {v} outside 0..{g.order - 1}")
    index = {v: i for i, v in enumerate(chosen)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(order=len(chosen), edges=edges)


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, (x for x in range(g.order) if x != v))


def diameter(g: Graph) -> int:
    """Largest eccentricity of a connected graph (0 for K0/K1).

    Raises:
        GraphArgumentError: If g is disconnected.
    """
    if g.order <= 1:
        return 0
    if not is_connected(g):
        raise GraphArgumentError("Diameter is undefined for a disconnected graph")
    return nx.diameter(to_networkx(g))


def _pattern_order(pattern: Graph) -> list[int]:
    """Match order: start at a max-degree vertex, then keep growing the
    already-placed region so adjacency constraints bite early."""
    remaining = set(range(pattern.order))
    order: list[int] = []
    while remaining:
        placed = set(order)
        frontier = [v for v in remaining if pattern.neighbors(v) & placed]
        pool = frontier or list(remaining)
        nxt = max(pool, key=lambda v: (len(pattern.neighbors(v) & placed), pattern.degree(v), -v))
        order.append(nxt)
        remaining.remove(nxt)
    return order


def find_induced(host: Graph, pattern: Graph) -> dict[int, int] | None:
    """Map pattern vertices onto host vertices inducing a copy of pattern.

    Backtracking with degree pruning: a pattern vertex of degree k only
    maps to host vertices of degree at least k.
    """
    if pattern.order > host.order:
        return None
    if pattern.order == 0:
        return {}
    order = _pattern_order(pattern)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        need = pattern.degree(p)
        for h in range(host.order):
            if h in used or host.degree(h) < need:
                continue
            if any(pattern.has_edge(p, q) != host.has_edge(h, mapping[q]) for q in order[:i]):
                continue
            mapping[p] = h
            used.add(h)
            if extend(i + 1):
                return True
            del mapping[p]
            used.discard(h)
        return False

    return dict(mapping) if extend(0) else None


def contains_induced(host: Graph, pattern: Graph) -> bool:
    return find_induced(host, pattern) is not None
