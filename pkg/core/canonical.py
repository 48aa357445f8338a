"""Canonical forms and isomorphism testing for small graphs.

Individualization-refinement: vertices are split into cells by equitable
refinement, a non-singleton cell is individualized one vertex at a time,
and every discrete leaf yields an adjacency code.  The minimum code over
the search tree is the canonical form.  Automorphisms discovered at
equal-code leaves prune sibling branches.
"""

from __future__ import annotations

import logging
from functools import lru_cache

from config.settings import settings
from core.errors import SizeLimitError
from core.models import Graph, Permutation

logger = logging.getLogger(__name__)


def refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Each cell is split by the number of neighbours its vertices have in
    some splitter cell; sub-cells are ordered by that count, so the result
    depends only on the graph structure and the input cell order.
    """
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for s in range(len(cells)):
            splitter = set(cells[s])
            out: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(len(g.neighbors(v) & splitter), []).append(v)
                if len(groups) > 1:
                    changed = True
                out.extend(groups[k] for k in sorted(groups))
            cells = out
            if changed:
                break
    return cells


def _leaf_code(g: Graph, lab: list[int]) -> str:
    n = len(lab)
    return "".join(
        "1" if g.has_edge(lab[i], lab[j]) else "0" for j in range(1, n) for i in range(j)
    )


def _orbit_roots(autos: list[Permutation], n: int) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in autos:
        for x in range(n):
            rx, ry = find(x), find(a[x])
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    return [find(x) for x in range(n)]


class _Canonizer:
    """One individualization-refinement search over a single graph."""

    def __init__(self, g: Graph) -> None:
        self.g = g
        self.first: tuple[str, list[int], list[int]] | None = None
        self.best: tuple[str, list[int]] | None = None
        self.autos: list[Permutation] = []
        self.leaves = 0

    def _record_auto(self, lab_from: list[int], lab_to: list[int]) -> None:
        perm = [0] * self.g.order
        for a, b in zip(lab_from, lab_to):
            perm[a] = b
        self.autos.append(tuple(perm))

    def search(self, cells: list[list[int]], path: list[int]) -> int | None:
        """Explore the subtree below ``path``; returns a backjump depth or None."""
        cells = refine(self.g, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            return self._leaf([c[0] for c in cells], path)

        depth = len(path)
        cell = sorted(cells[target])
        tried: list[int] = []
        for v in cell:
            if tried:
                fixing = [a for a in self.autos if all(a[p] == p for p in path)]
                if fixing:
                    roots = _orbit_roots(fixing, self.g.order)
                    if any(roots[v] == roots[u] for u in tried):
                        continue
            tried.append(v)
            rest = [x for x in cells[target] if x != v]
            child = cells[:target] + [[v], rest] + cells[target + 1 :]
            jump = self.search(child, path + [v])
            if jump is not None and jump < depth:
                return jump
        return None

    def _leaf(self, lab: list[int], path: list[int]) -> int | None:
        self.leaves += 1
        code = _leaf_code(self.g, lab)
        if self.first is None:
            self.first = (code, lab, path)
            self.best = (code, lab)
            return None
        assert self.best is not None
        first_code, first_lab, first_path = self.first
        if code == first_code:
            self._record_auto(first_lab, lab)
            common = 0
            while common < min(len(path), len(first_path)) and path[common] == first_path[common]:
                common += 1
            return common
        if code == self.best[0]:
            self._record_auto(self.best[1], lab)
        elif code < self.best[0]:
            self.best = (code, lab)
        return None


@lru_cache(maxsize=1 << 16)
def _canonical(g: Graph) -> tuple[bytes, Permutation]:
    if g.order == 0:
        return b"0:", ()
    canon = _Canonizer(g)
    canon.search([list(range(g.order))], [])
    assert canon.best is not None
    code, lab = canon.best
    logger.debug("Canonical search on order %d visited %d leaves", g.order, canon.leaves)
    return f"{g.order}:{code}".encode(), tuple(lab)


def _check_order(g: Graph) -> None:
    if g.order > settings.canonical_max_order:
        raise SizeLimitError(
            f"Order {g.order} exceeds canonical_max_order={settings.canonical_max_order}"
        )


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic.

    Raises:
        SizeLimitError: If the order exceeds settings.canonical_max_order.
    """
    _check_order(g)
    return _canonical(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The isomorphism-class representative whose adjacency code is canonical_form."""
    _check_order(g)
    _, lab = _canonical(g)
    perm = [0] * g.order
    for i, v in enumerate(lab):
        perm[v] = i
    return g.relabel(tuple(perm))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.order != b.order or a.edge_count != b.edge_count:
        return False
    if sorted(a.degrees) != sorted(b.degrees):
        return False
    return canonical_form(a) == canonical_form(b)
