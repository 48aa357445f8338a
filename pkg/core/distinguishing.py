"""Distinguishing numbers and indices, v-distinguishing counts and the
tree family behind D'(T) = D(T) + 1.

Both D and D' are computed by the same exact search over labelings of a
point set (vertices, or edges under the induced action) that is acted on
by a permutation group.
"""

from __future__ import annotations

import itertools
import logging
from functools import lru_cache

from config.settings import FamilyConvention, settings
from core.automorphism import (
    automorphisms,
    edge_action,
    induced_edge_permutation,
    is_edge_action_faithful,
    preserves_edge_labeling,
    preserves_vertex_labeling,
)
from core.errors import GraphArgumentError, SizeLimitError, UndefinedIndexError
from core.graph_ops import is_connected
from core.models import (
    AutomorphismGroup,
    EdgeLabeling,
    FamilyTEvaluation,
    Graph,
    Permutation,
    TreeBoundsReport,
    VDistinguishingCounts,
    VertexLabeling,
)
from core.trees import (
    is_bisymmetric_tree,
    is_odd_length_path,
    is_symmetric_tree,
    is_tree,
    rooted_code,
    split_at_central_edge,
    tree_center,
)

logger = logging.getLogger(__name__)

CONVENTIONS: tuple[FamilyConvention, ...] = ("raw", "label", "automorphism")
MAX_LABELINGS = 10_000_000


def _first_occurrence(seq: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    """Rename labels 0, 1, 2, ... in order of first appearance."""
    names: dict[int, int] = {}
    return tuple(names.setdefault(x, len(names)) for x in seq)


# ---------------------------------------------------------------------------
# Search engine
# ---------------------------------------------------------------------------


class _LabelingSearch:
    """Find an r-labeling of 0..n-1 that no non-identity group element preserves.

    Points fixed by the whole group always get the first label.  The others
    are labelled orbit by orbit.  Pruning:

    * labels are introduced in increasing order (label permutations are
      symmetries of the problem);
    * a group element is tested as soon as its whole support is labelled,
      and a preserved element kills the branch;
    * when the setwise stabilizer of the labelled prefix is small enough,
      prefixes equivalent under it are extended only once.
    """

    def __init__(self, n: int, group: list[Permutation], stabilizer_cap: int) -> None:
        self.n = n
        identity = tuple(range(n))
        moving = [p for p in group if p != identity]
        supports = {p: [x for x in range(n) if p[x] != x] for p in moving}
        moved = sorted({x for sup in supports.values() for x in sup})
        orbit_min = {x: min(p[x] for p in group) for x in moved}
        self.order = sorted(moved, key=lambda x: (orbit_min[x], x))
        self.pos = {x: i for i, x in enumerate(self.order)}

        self.checks: list[list[tuple[tuple[int, int], ...]]] = [[] for _ in self.order]
        for p in moving:
            sup = supports[p]
            last = max(self.pos[x] for x in sup)
            self.checks[last].append(tuple((self.pos[x], self.pos[p[x]]) for x in sup))

        self.prefix_perms: list[list[tuple[int, ...]] | None] = [None] * len(self.order)
        if 1 < len(group) <= stabilizer_cap:
            for d in range(1, len(self.order) + 1):
                prefix = self.order[:d]
                inside = set(prefix)
                stab = [p for p in group if all(p[x] in inside for x in prefix)]
                if len(stab) > 1:
                    self.prefix_perms[d - 1] = [
                        tuple(self.pos[p[x]] for x in prefix) for p in stab
                    ]
        self.nodes = 0

    def find(self, r: int) -> tuple[int, ...] | None:
        """A distinguishing labeling with labels 1..r, or None."""
        size = len(self.order)
        labels = [0] * size
        seen: list[set[tuple[int, ...]]] = [set() for _ in range(size)]

        def extend(i: int, max_used: int) -> bool:
            if i == size:
                return True
            for lab in range(min(r, max_used + 2)):
                self.nodes += 1
                labels[i] = lab
                if any(all(labels[a] == labels[b] for a, b in pairs) for pairs in self.checks[i]):
                    continue
                perms = self.prefix_perms[i]
                if perms is not None:
                    key = min(_first_occurrence([labels[j] for j in pp]) for pp in perms)
                    if key in seen[i]:
                        continue
                    seen[i].add(key)
                if extend(i + 1, max(max_used, lab)):
                    return True
            return False

        if not extend(0, -1):
            return None
        out = [1] * self.n
        for i, x in enumerate(self.order):
            out[x] = labels[i] + 1
        return tuple(out)

    def least(self) -> tuple[int, tuple[int, ...]]:
        """Smallest r with a distinguishing labeling, and the first one found."""
        for r in range(1, max(self.n, 1) + 1):
            found = self.find(r)
            if found is not None:
                logger.debug("Labeling search: r=%d after %d nodes", r, self.nodes)
                return r, found
        raise GraphArgumentError("No distinguishing labeling exists for this action")


# ---------------------------------------------------------------------------
# D(G) and D'(G)
# ---------------------------------------------------------------------------


def is_distinguishing_vertex(g: Graph, c: VertexLabeling, aut: AutomorphismGroup) -> bool:
    """True iff no non-identity automorphism preserves c."""
    if len(c.labels) != g.order:
        raise GraphArgumentError(f"{len(c.labels)} labels for {g.order} vertices")
    return not any(preserves_vertex_labeling(s, c) for s in aut.non_identity)


def is_distinguishing_edge(g: Graph, c: EdgeLabeling, aut: AutomorphismGroup) -> bool:
    """True iff no non-identity automorphism preserves the edge labeling c."""
    if len(c.labels) != g.edge_count:
        raise GraphArgumentError(f"{len(c.labels)} labels for {g.edge_count} edges")
    return not any(preserves_edge_labeling(s, g, c) for s in aut.non_identity)


@lru_cache(maxsize=4096)
def _vertex_solution(g: Graph, aut_cap: int, stab_cap: int) -> tuple[int, tuple[int, ...]]:
    aut = automorphisms(g, cap=aut_cap)
    return _LabelingSearch(g.order, list(aut.elements), stab_cap).least()


@lru_cache(maxsize=4096)
def _edge_solution(g: Graph, aut_cap: int, stab_cap: int) -> tuple[int, tuple[int, ...]]:
    aut = automorphisms(g, cap=aut_cap)
    if not is_edge_action_faithful(aut):
        raise UndefinedIndexError(
            "Distinguishing index is undefined: a non-identity automorphism fixes every edge"
        )
    group = sorted(set(edge_action(aut)))
    return _LabelingSearch(g.edge_count, group, stab_cap).least()


def distinguishing_vertex_labeling(g: Graph) -> VertexLabeling:
    """First distinguishing vertex labeling with D(g) labels."""
    if g.order < 1:
        raise GraphArgumentError("Distinguishing number needs at least one vertex")
    r, labels = _vertex_solution(g, settings.automorphism_cap, settings.stabilizer_pruning_cap)
    return VertexLabeling(labels=labels, r=r)


def distinguishing_number(g: Graph) -> int:
    """D(g): least r with an r-labeling of the vertices fixed only by the identity.

    Raises:
        CapacityError: Propagated from automorphisms.
    """
    return distinguishing_vertex_labeling(g).r


def distinguishing_edge_labeling(g: Graph) -> EdgeLabeling:
    """First distinguishing edge labeling with D'(g) labels."""
    d, labels = _edge_solution(g, settings.automorphism_cap, settings.stabilizer_pruning_cap)
    return EdgeLabeling(labels=labels, d=d)


def distinguishing_index(g: Graph) -> int:
    """D'(g); D'(K1) = 1.

    Raises:
        UndefinedIndexError: If some non-identity automorphism induces the
            identity on edges (K2 among connected graphs).
    """
    return distinguishing_edge_labeling(g).d


def distinguishing_index_or_none(g: Graph) -> int | None:
    try:
        return distinguishing_index(g)
    except UndefinedIndexError:
        return None


# ---------------------------------------------------------------------------
# v-distinguishing labelings and the tree family
# ---------------------------------------------------------------------------


def v_distinguishing_counts(t: Graph, v: int, k: int) -> VDistinguishingCounts:
    """Count edge k-labelings preserved by no non-identity automorphism fixing v.

    The count is reported three ways: raw, up to permutations of the label
    set, and up to the v-fixing automorphisms.  v-distinguishing labelings
    have trivial stabilizer, so every automorphism orbit has exactly
    |Stab(v)| members.

    Raises:
        GraphArgumentError: If t is disconnected, v is out of range or k < 1.
    """
    if not is_connected(t):
        raise GraphArgumentError("v-distinguishing counts need a connected graph")
    if not 0 <= v < t.order:
        raise GraphArgumentError(f"Vertex {v} outside 0..{t.order - 1}")
    if k < 1:
        raise GraphArgumentError(f"Label count must be at least 1, got {k}")
    m = t.edge_count
    if k**m > MAX_LABELINGS:
        raise SizeLimitError(f"{k}^{m} edge labelings exceed {MAX_LABELINGS}")

    fixing = [s for s in automorphisms(t).elements if s[v] == v]
    identity = tuple(range(t.order))
    edge_perms = [induced_edge_permutation(s, t) for s in fixing if s != identity]

    raw = 0
    normalized = 0
    for lab in itertools.product(range(k), repeat=m):
        if any(all(lab[i] == lab[p[i]] for i in range(m)) for p in edge_perms):
            continue
        raw += 1
        if _first_occurrence(lab) == lab:
            normalized += 1
    return VDistinguishingCounts(
        k=k, raw=raw, modulo_labels=normalized, modulo_automorphisms=raw // len(fixing)
    )


def count_v_distinguishing_edge_labelings(
    t: Graph, v: int, k: int, convention: FamilyConvention = "raw"
) -> int:
    return v_distinguishing_counts(t, v, k).under(convention)


def _require_tree(t: Graph) -> None:
    if not is_tree(t) or t.order < 3:
        raise GraphArgumentError("Expected a tree of order at least 3")


def evaluate_family_t(t: Graph) -> FamilyTEvaluation:
    """Check the three membership conditions under every counting convention.

    Halves are compared as trees rooted at the central-edge endpoints, which
    is what a central-edge flip needs.
    """
    _require_tree(t)
    none = {c: False for c in CONVENTIONS}
    if len(tree_center(t)) != 2:
        return FamilyTEvaluation(bicentric=False, halves_isomorphic=False, membership=none)
    (tv, rv), (tw, rw) = split_at_central_edge(t)
    if rooted_code(tv, rv) != rooted_code(tw, rw):
        return FamilyTEvaluation(bicentric=True, halves_isomorphic=False, membership=none)
    counts = v_distinguishing_counts(tv, rv, distinguishing_number(t))
    return FamilyTEvaluation(
        bicentric=True,
        halves_isomorphic=True,
        counts=counts,
        membership={c: counts.under(c) == 1 for c in CONVENTIONS},
    )


def is_in_family_T(t: Graph, convention: FamilyConvention | None = None) -> bool:
    """Membership in the tree family with D'(T) = D(T) + 1.

    Raises:
        GraphArgumentError: If t is not a tree of order >= 3.
    """
    chosen = convention or settings.family_t_convention
    return evaluate_family_t(t).membership[chosen]


def verify_tree_bounds(t: Graph, convention: FamilyConvention | None = None) -> TreeBoundsReport:
    """D(T) <= Delta(T) with its equality cases, and D'(T) - D(T) against the family."""
    _require_tree(t)
    d = distinguishing_number(t)
    d_index = distinguishing_index(t)
    symmetric = is_symmetric_tree(t)
    odd_path = is_odd_length_path(t)
    return TreeBoundsReport(
        order=t.order,
        max_degree=t.max_degree,
        distinguishing_number=d,
        distinguishing_index=d_index,
        symmetric=symmetric,
        bisymmetric=is_bisymmetric_tree(t),
        odd_path=odd_path,
        equality_predicted=symmetric or odd_path,
        equality_observed=d == t.max_degree,
        bound_holds=d <= t.max_degree,
        index_gap=d_index - d,
        family=evaluate_family_t(t),
        convention=convention or settings.family_t_convention,
    )
