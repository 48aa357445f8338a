"""Parametric graph families with documented vertex numbering.

The standard families come from the networkx generators, whose integer
node numbering is kept as is.
"""

from __future__ import annotations

from collections.abc import Sequence

import networkx as nx

from core.errors import GraphArgumentError
from core.graph_ops import from_networkx
from core.models import Graph


def _positive(name: str, value: int, minimum: int = 1) -> None:
    if value < minimum:
        raise GraphArgumentError(f"{name} must be at least {minimum}, got {value}")


def complete(n: int) -> Graph:
    _positive("n", n, 0)
    return from_networkx(nx.complete_graph(n))


def path(n: int) -> Graph:
    """P_n on n vertices, numbered along the path."""
    _positive("n", n, 0)
    return from_networkx(nx.path_graph(n))


def cycle(n: int) -> Graph:
    """C_n, numbered around the cycle."""
    _positive("n", n, 3)
    return from_networkx(nx.cycle_graph(n))


def star(n: int) -> Graph:
    """K_{1,n}: hub 0, leaves 1..n."""
    _positive("n", n, 0)
    return from_networkx(nx.star_graph(n))


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q}: one side 0..p-1, the other p..p+q-1."""
    _positive("p", p, 0)
    _positive("q", q, 0)
    return from_networkx(nx.complete_bipartite_graph(p, q))


def spider(legs: Sequence[int]) -> Graph:
    """Center 0; each leg numbered consecutively outwards, legs in the given order."""
    for length in legs:
        _positive("leg length", length)
    h = nx.empty_graph(1)
    nxt = 1
    for length in legs:
        nx.add_path(h, [0, *range(nxt, nxt + length)])
        nxt += length
    return from_networkx(h)
