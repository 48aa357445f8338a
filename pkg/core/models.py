"""Domain models for graph symmetry computations.

Pure data structures with validation and cheap derived views. Search
logic lives in core/automorphism.py, core/distinguishing.py and
core/graphoidal.py; the theorem scans live in core/harness.py.
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PrivateAttr,
    ValidationInfo,
    computed_field,
    field_validator,
    model_validator,
)

from core.errors import GraphArgumentError

Permutation = tuple[int, ...]
Edge = tuple[int, int]

# ---------------------------------------------------------------------------
# Graphs and labelings
# ---------------------------------------------------------------------------


class Graph(BaseModel):
    """Simple undirected graph on vertices 0..order-1.

    Edges are stored as ``(u, v)`` pairs with ``u < v``, sorted, so edge
    positions (used by edge labelings and line graphs) are deterministic.
    """

    model_config = ConfigDict(frozen=True)

    order: int = Field(ge=0)
    edges: tuple[Edge, ...] = ()

    _adjacency: tuple[frozenset[int], ...] = PrivateAttr(default=())
    _positions: dict[Edge, int] = PrivateAttr(default_factory=dict)

    @field_validator("edges", mode="before")
    @classmethod
    def normalize_edges(cls, v: Any, info: ValidationInfo) -> tuple[Edge, ...]:
        order = info.data.get("order")
        pairs: list[Edge] = []
        for edge in v:
            a, b = (int(x) for x in edge)
            if a == b:
                raise ValueError(f"Self-loop at vertex {a}")
            if order is not None and not (0 <= a < order and 0 <= b < order):
                raise ValueError(f"Edge ({a}, {b}) has an endpoint outside 0..{order - 1}")
            pairs.append((min(a, b), max(a, b)))
        pairs.sort()
        for prev, cur in zip(pairs, pairs[1:]):
            if prev == cur:
                raise ValueError(f"Duplicate edge {cur}")
        return tuple(pairs)

    def model_post_init(self, __context: Any) -> None:
        adjacency: list[set[int]] = [set() for _ in range(self.order)]
        for u, v in self.edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        self._adjacency = tuple(frozenset(s) for s in adjacency)
        self._positions = {e: i for i, e in enumerate(self.edges)}

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self._adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.order and v in self._adjacency[u]

    def edge_position(self, u: int, v: int) -> int:
        """Index of edge {u, v} in the sorted edge list."""
        try:
            return self._positions[(min(u, v), max(u, v))]
        except KeyError:
            raise GraphArgumentError(f"({u}, {v}) is not an edge") from None

    def relabel(self, perm: Permutation) -> Graph:
        """Graph with vertex x renamed to perm[x]."""
        if sorted(perm) != list(range(self.order)):
            raise GraphArgumentError(f"Not a permutation of 0..{self.order - 1}: {perm}")
        return Graph(order=self.order, edges=[(perm[u], perm[v]) for u, v in self.edges])


class VertexLabeling(BaseModel):
    """Labels 1..r indexed by vertex."""

    model_config = ConfigDict(frozen=True)

    labels: tuple[int, ...]
    r: int = Field(ge=1)

    @model_validator(mode="after")
    def labels_in_range(self) -> VertexLabeling:
        bad = [x for x in self.labels if not 1 <= x <= self.r]
        if bad:
            raise ValueError(f"Labels {sorted(set(bad))} fall outside 1..{self.r}")
        return self


class EdgeLabeling(BaseModel):
    """Labels 1..d indexed by position in the host's sorted edge list."""

    model_config = ConfigDict(frozen=True)

    labels: tuple[int, ...]
    d: int = Field(ge=1)

    @model_validator(mode="after")
    def labels_in_range(self) -> EdgeLabeling:
        bad = [x for x in self.labels if not 1 <= x <= self.d]
        if bad:
            raise ValueError(f"Labels {sorted(set(bad))} fall outside 1..{self.d}")
        return self

    def as_pairs(self, g: Graph) -> list[tuple[Edge, int]]:
        """(edge, label) pairs in the graph's edge order."""
        if len(self.labels) != g.edge_count:
            raise GraphArgumentError(
                f"Labeling has {len(self.labels)} labels, graph has {g.edge_count} edges"
            )
        return list(zip(g.edges, self.labels))


# ---------------------------------------------------------------------------
# Automorphism groups
# ---------------------------------------------------------------------------


def compose(a: Permutation, b: Permutation) -> Permutation:
    """a after b."""
    return tuple(a[x] for x in b)


def inverse(a: Permutation) -> Permutation:
    out = [0] * len(a)
    for x, y in enumerate(a):
        out[y] = x
    return tuple(out)


def _generated_size_bounded(gens: list[Permutation], identity: Permutation, bound: int) -> set:
    """Elements generated by gens; stops early once more than bound are found."""
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > bound:
                        return seen
        frontier = nxt
    return seen


class AutomorphismGroup(BaseModel):
    """Explicit element list of Aut(graph), sorted lexicographically."""

    model_config = ConfigDict(frozen=True)

    graph: Graph
    elements: tuple[Permutation, ...]

    @model_validator(mode="after")
    def check_group(self) -> AutomorphismGroup:
        n = self.graph.order
        identity = tuple(range(n))
        members = set(self.elements)
        if len(members) != len(self.elements):
            raise ValueError("Duplicate group elements")
        if identity not in members:
            raise ValueError("Identity missing from group")
        for sigma in self.elements:
            if len(sigma) != n or sorted(sigma) != list(identity):
                raise ValueError(f"Not a permutation of 0..{n - 1}: {sigma}")
            for u, v in self.graph.edges:
                if not self.graph.has_edge(sigma[u], sigma[v]):
                    raise ValueError(f"{sigma} does not preserve edge ({u}, {v})")

        # A finite set containing the identity is a group iff it equals the
        # subgroup generated by its own elements.
        gens: list[Permutation] = []
        span = {identity}
        for sigma in self.elements:
            if sigma in span:
                continue
            gens.append(sigma)
            span = _generated_size_bounded(gens, identity, len(members))
            if len(span) > len(members):
                raise ValueError("Element list is not closed under composition")
        if span != members:
            raise ValueError("Element list is not closed under composition")
        return self

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return tuple(range(self.graph.order))

    @property
    def non_identity(self) -> list[Permutation]:
        identity = self.identity
        return [s for s in self.elements if s != identity]


# ---------------------------------------------------------------------------
# Line graphs
# ---------------------------------------------------------------------------


class LineGraphResult(BaseModel):
    """L(G) plus the map from edges of G to vertices of L(G)."""

    line: Graph
    edge_index: dict[Edge, int]

    @model_validator(mode="after")
    def check_bijection(self) -> LineGraphResult:
        if sorted(self.edge_index.values()) != list(range(self.line.order)):
            raise ValueError("edge_index is not a bijection onto the line graph vertices")
        return self


# ---------------------------------------------------------------------------
# Graphoidal covers
# ---------------------------------------------------------------------------


class GraphoidalPath(BaseModel):
    """Vertex sequence v0..vk, closed when v0 == vk and k >= 3.

    A closed path's first vertex is its only terminal vertex.
    """

    model_config = ConfigDict(frozen=True)

    vertices: tuple[int, ...]

    @field_validator("vertices")
    @classmethod
    def check_shape(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if len(v) < 2:
            raise ValueError("A path needs at least two vertices")
        body = v[:-1] if len(v) >= 4 and v[0] == v[-1] else v
        if len(set(body)) != len(body):
            raise ValueError(f"Path {list(v)} repeats a vertex")
        return v

    @property
    def closed(self) -> bool:
        return len(self.vertices) >= 4 and self.vertices[0] == self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def terminals(self) -> frozenset[int]:
        return frozenset((self.vertices[0], self.vertices[-1]))

    @property
    def internal_vertices(self) -> frozenset[int]:
        return frozenset(self.vertices[1:-1])

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def edge_pairs(self) -> tuple[Edge, ...]:
        """Edges in traversal order, each as a sorted pair."""
        vs = self.vertices
        return tuple((min(a, b), max(a, b)) for a, b in zip(vs, vs[1:]))

    def canonical(self) -> GraphoidalPath:
        """Open paths start at the smaller endpoint; closed paths keep their
        terminal and go towards the smaller of its two cycle neighbours."""
        vs = self.vertices
        if self.closed:
            if vs[1] > vs[-2]:
                return GraphoidalPath(vertices=tuple(reversed(vs)))
            return self
        if vs[0] > vs[-1]:
            return GraphoidalPath(vertices=tuple(reversed(vs)))
        return self


class GraphoidalCover(BaseModel):
    """Indexed family of paths; condition checks live in validate_cover."""

    model_config = ConfigDict(frozen=True)

    paths: tuple[GraphoidalPath, ...]

    @property
    def size(self) -> int:
        return len(self.paths)

    @property
    def all_open(self) -> bool:
        return not any(p.closed for p in self.paths)


class CoverViolation(BaseModel):
    """One broken cover condition."""

    condition: Literal["i", "ii", "iii"]
    message: str
    vertex: int | None = None
    edge: Edge | None = None
    paths: tuple[int, ...] = ()


class CoverCheck(BaseModel):
    violations: list[CoverViolation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


class GraphoidalInstance(BaseModel):
    """A constructed host graph with its cover and construction metadata."""

    name: str
    graph: Graph
    cover: GraphoidalCover
    parameters: dict[str, int] = Field(default_factory=dict)
    notes: dict[str, Any] = Field(default_factory=dict)


# ---------------------------------------------------------------------------
# Per-instance reports
# ---------------------------------------------------------------------------


class VDistinguishingCounts(BaseModel):
    """v-distinguishing edge k-labelings of a rooted tree, under each convention."""

    k: int
    raw: int
    modulo_labels: int
    modulo_automorphisms: int

    def under(self, convention: str) -> int:
        return {
            "raw": self.raw,
            "label": self.modulo_labels,
            "automorphism": self.modulo_automorphisms,
        }[convention]


class FamilyTEvaluation(BaseModel):
    bicentric: bool
    halves_isomorphic: bool
    counts: VDistinguishingCounts | None = None
    membership: dict[str, bool]


class TreeBoundsReport(BaseModel):
    order: int
    max_degree: int
    distinguishing_number: int
    distinguishing_index: int
    symmetric: bool
    bisymmetric: bool
    odd_path: bool
    equality_predicted: bool
    equality_observed: bool
    bound_holds: bool
    index_gap: int
    family: FamilyTEvaluation
    convention: str

    @property
    def family_consistent(self) -> bool:
        return self.family.membership[self.convention] == (self.index_gap == 1)

    @property
    def passed(self) -> bool:
        return (
            self.bound_holds
            and self.equality_predicted == self.equality_observed
            and self.index_gap in (0, 1)
            and self.family_consistent
        )


class SchemeRepair(BaseModel):
    """Omega labeling and reversed paths whose tuple labeling distinguishes the host."""

    omega_labels: tuple[int, ...]
    reversed_paths: tuple[int, ...]
    labeling: EdgeLabeling
    attempts: int


class GraphoidalBoundsReport(BaseModel):
    """Bounds relating D'(G) to Omega(G, psi); None marks a check that does not apply.

    The ``*_scheme_*`` fields record whether the tuple labelings built from the
    first distinguishing labeling of Omega distinguish G.  They are reported,
    not enforced: ``passed`` covers the numeric bounds only.
    """

    cover_size: int
    omega_order: int
    index_g: int | None
    number_omega: int
    index_omega: int | None
    index_bounds_apply: bool
    index_upper_holds: bool | None = None
    index_equality_observed: bool | None = None
    index_equality_predicted: bool | None = None
    lower_bound_holds: bool | None = None
    upper_bound_holds: bool
    open_only: bool
    open_bound_holds: bool | None = None
    general_scheme_ok: bool | None = None
    general_scheme_reversed_ok: bool | None = None
    general_scheme_repaired: bool | None = None
    open_scheme_ok: bool | None = None
    open_scheme_repaired: bool | None = None

    @property
    def passed(self) -> bool:
        checks = [
            self.index_upper_holds,
            self.lower_bound_holds,
            self.upper_bound_holds,
            self.open_bound_holds,
        ]
        if self.index_bounds_apply:
            checks.append(self.index_equality_observed == self.index_equality_predicted)
        return all(c is not False for c in checks)

    @property
    def scheme_failures(self) -> list[str]:
        names = ("general_scheme_ok", "general_scheme_reversed_ok", "open_scheme_ok")
        return [n for n in names if getattr(self, n) is False]


# ---------------------------------------------------------------------------
# Verification reports
# ---------------------------------------------------------------------------


class Violation(BaseModel):
    """A counterexample witness, replayable from graph6 and cover text."""

    instance: int
    graph6: str
    cover: str | None = None
    check: str
    observed: dict[str, Any] = Field(default_factory=dict)


class Finding(BaseModel):
    """Informational result that is reported but never fails a run."""

    topic: str
    graph6: str | None = None
    detail: dict[str, Any] = Field(default_factory=dict)


class VerificationReport(BaseModel):
    theorem_id: str
    max_n: int
    instances_scanned: int = 0
    violations: list[Violation] = Field(default_factory=list)
    findings: list[Finding] = Field(default_factory=list)
    elapsed_seconds: float = 0.0

    @computed_field  # type: ignore[prop-decorator]
    @property
    def verdict(self) -> Literal["pass", "fail"]:
        return "fail" if self.violations else "pass"
