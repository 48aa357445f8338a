"""Tree structure: centers, AHU codes, enumeration and the symmetric /
bisymmetric predicates used by the tree bounds."""

from __future__ import annotations

import logging
from functools import lru_cache

from config.settings import settings
from core.errors import GraphArgumentError, SizeLimitError
from core.graph_ops import bfs_distances, components, induced_subgraph, is_connected
from core.models import Graph

logger = logging.getLogger(__name__)


def is_tree(g: Graph) -> bool:
    return g.order >= 1 and g.edge_count == g.order - 1 and is_connected(g)


def _require_tree(t: Graph, min_order: int = 1) -> None:
    if not is_tree(t):
        raise GraphArgumentError("Graph is not a tree")
    if t.order < min_order:
        raise GraphArgumentError(f"Tree order {t.order} is below {min_order}")


def tree_center(t: Graph) -> list[int]:
    """Center by iterated leaf removal: one vertex, or two adjacent vertices.

    Raises:
        GraphArgumentError: If t is not a tree.
    """
    _require_tree(t)
    degree = list(t.degrees)
    remaining = t.order
    layer = [v for v in range(t.order) if degree[v] <= 1]
    removed = [False] * t.order
    while remaining > 2:
        nxt = []
        for leaf in layer:
            removed[leaf] = True
            remaining -= 1
            for u in t.neighbors(leaf):
                if not removed[u]:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(v for v in range(t.order) if not removed[v])


def rooted_code(t: Graph, root: int, banned: int | None = None) -> str:
    """AHU code of the tree hanging from root, ignoring the vertex ``banned``."""
    children = [u for u in t.neighbors(root) if u != banned]
    if not children:
        return "()"
    return "(" + "".join(sorted(rooted_code(t, u, root) for u in children)) + ")"


def tree_code(t: Graph) -> str:
    """Isomorphism-invariant code of an unrooted tree."""
    center = tree_center(t)
    if len(center) == 1:
        return rooted_code(t, center[0])
    a, b = center
    return "".join(sorted((rooted_code(t, a, b), rooted_code(t, b, a))))


@lru_cache(maxsize=None)
def _tree_level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(order=1),)
    found: dict[str, Graph] = {}
    for t in _tree_level(n - 1):
        for v in range(n - 1):
            g = Graph(order=n, edges=[*t.edges, (v, n - 1)])
            found.setdefault(tree_code(g), g)
    level = tuple(found[k] for k in sorted(found))
    logger.info("Enumerated %d trees on %d vertices", len(level), n)
    return level


def enumerate_trees(n: int, cap: int | None = None) -> list[Graph]:
    """One tree per isomorphism class on n vertices, by leaf addition.

    Raises:
        SizeLimitError: If n exceeds cap (default settings.tree_max_order).
    """
    limit = settings.tree_max_order if cap is None else cap
    if n < 1:
        raise GraphArgumentError(f"Trees need at least one vertex, got {n}")
    if n > limit:
        raise SizeLimitError(f"Order {n} exceeds tree cap {limit}")
    return list(_tree_level(n))


def _leaves_and_inner_degrees(t: Graph) -> tuple[list[int], set[int]]:
    leaves = [v for v in range(t.order) if t.degree(v) == 1]
    inner = {t.degree(v) for v in range(t.order) if t.degree(v) > 1}
    return leaves, inner


def is_symmetric_tree(t: Graph) -> bool:
    """Central tree, leaves equidistant from the center, one common inner degree."""
    _require_tree(t, min_order=2)
    center = tree_center(t)
    if len(center) != 1:
        return False
    dist = bfs_distances(t, center[0])
    leaves, inner = _leaves_and_inner_degrees(t)
    return len({dist[x] for x in leaves}) == 1 and len(inner) <= 1


def is_bisymmetric_tree(t: Graph) -> bool:
    """Bicentric tree, leaves equidistant from the central edge, one common inner degree."""
    _require_tree(t, min_order=2)
    center = tree_center(t)
    if len(center) != 2:
        return False
    da, db = (bfs_distances(t, c) for c in center)
    leaves, inner = _leaves_and_inner_degrees(t)
    return len({min(da[x], db[x]) for x in leaves}) == 1 and len(inner) <= 1


def is_odd_length_path(t: Graph) -> bool:
    return is_tree(t) and t.max_degree <= 2 and t.edge_count % 2 == 1


def split_at_central_edge(t: Graph) -> tuple[tuple[Graph, int], tuple[Graph, int]]:
    """Halves of a bicentric tree with their roots, relabelled in vertex order.

    Returns:
        ((T_v, root of T_v), (T_w, root of T_w)) for the central edge vw, v < w.

    Raises:
        GraphArgumentError: If t is not a bicentric tree.
    """
    center = tree_center(t)
    if len(center) != 2:
        raise GraphArgumentError("Tree is not bicentric")
    v, w = center
    cut = Graph(order=t.order, edges=[e for e in t.edges if e != (v, w)])
    halves = []
    for root in (v, w):
        comp = next(c for c in components(cut) if root in c)
        halves.append((induced_subgraph(t, comp), comp.index(root)))
    return halves[0], halves[1]
