"""Exhaustive enumeration of connected graphs up to isomorphism.

Graphs on n vertices come from graphs on n - 1 vertices by adding a vertex
joined to a nonempty neighbour set (every connected graph has a
non-cut vertex, so nothing is missed); duplicates are removed by
canonical form.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from functools import lru_cache

from config.settings import settings
from core.canonical import canonical_form, canonical_graph
from core.errors import GraphArgumentError, SizeLimitError
from core.graph_ops import is_connected
from core.models import Graph

logger = logging.getLogger(__name__)


def _sorted_classes(found: dict[bytes, Graph]) -> tuple[Graph, ...]:
    return tuple(found[k] for k in sorted(found, key=lambda k: (found[k].edge_count, k)))


@lru_cache(maxsize=None)
def _connected_level(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(order=0),)
    if n == 1:
        return (Graph(order=1),)
    found: dict[bytes, Graph] = {}
    new = n - 1
    for h in _connected_level(n - 1):
        base = list(h.edges)
        for mask in range(1, 1 << new):
            g = Graph(order=n, edges=base + [(u, new) for u in range(new) if mask >> u & 1])
            key = canonical_form(g)
            if key not in found:
                found[key] = canonical_graph(g)
    level = _sorted_classes(found)
    logger.info("Enumerated %d connected graphs on %d vertices", len(level), n)
    return level


def enumerate_connected_graphs(n: int, cap: int | None = None) -> list[Graph]:
    """One representative per isomorphism class of connected graphs on n vertices.

    Args:
        n: Number of vertices.
        cap: Largest admissible n; defaults to settings.enumeration_max_order.

    Returns:
        Canonical representatives ordered by (edge count, canonical form).

    Raises:
        SizeLimitError: If n exceeds the cap.
    """
    limit = settings.enumeration_max_order if cap is None else cap
    if n < 0:
        raise GraphArgumentError(f"Order must be non-negative, got {n}")
    if n > limit:
        raise SizeLimitError(f"Order {n} exceeds enumeration cap {limit}")
    return list(_connected_level(n))


@lru_cache(maxsize=None)
def _connected_by_size(m: int) -> tuple[Graph, ...]:
    if m == 0:
        return (Graph(order=1),)
    found: dict[bytes, Graph] = {}
    for h in _connected_by_size(m - 1):
        n = h.order
        candidates = [
            Graph(order=n, edges=[*h.edges, (u, v)])
            for v in range(n)
            for u in range(v)
            if not h.has_edge(u, v)
        ]
        candidates += [Graph(order=n + 1, edges=[*h.edges, (u, n)]) for u in range(n)]
        for g in candidates:
            key = canonical_form(g)
            if key not in found:
                found[key] = canonical_graph(g)
    return _sorted_classes(found)


def enumerate_connected_by_size(m: int) -> list[Graph]:
    """Connected graphs with exactly m edges (K1 for m = 0), up to isomorphism.

    A connected graph with m edges has a leaf edge or a cycle edge, whose
    removal leaves a connected graph with m - 1 edges; the search adds
    either kind back.
    """
    if m < 0:
        raise GraphArgumentError(f"Edge count must be non-negative, got {m}")
    if m + 1 > settings.canonical_max_order:
        raise SizeLimitError(f"{m} edges allow orders beyond the canonical-form cap")
    return list(_connected_by_size(m))


def connected_representatives(graphs: Iterable[Graph]) -> list[Graph]:
    """Connected members of an external stream, one per isomorphism class.

    Lets graph6 files from third-party generators stand in for the built-in
    enumeration; first occurrence wins and input order is kept.
    """
    seen: set[bytes] = set()
    out: list[Graph] = []
    for g in graphs:
        if not is_connected(g):
            continue
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out
