"""Graphoidal covers: validation, intersection graphs, exhaustive cover
enumeration, parametric constructions and the tuple edge labelings."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Collection, Iterator

from config.settings import settings
from core.automorphism import automorphisms
from core.canonical import are_isomorphic, canonical_form, canonical_graph
from core.distinguishing import (
    distinguishing_index_or_none,
    distinguishing_number,
    distinguishing_vertex_labeling,
    is_distinguishing_edge,
    is_distinguishing_vertex,
)
from core.errors import (
    CapacityError,
    CoverError,
    CoverValidationError,
    GraphArgumentError,
    SizeLimitError,
)
from core.families import complete, cycle, star
from core.graph_ops import is_connected
from core.models import (
    AutomorphismGroup,
    CoverCheck,
    CoverViolation,
    Edge,
    EdgeLabeling,
    Graph,
    GraphoidalBoundsReport,
    GraphoidalCover,
    GraphoidalInstance,
    GraphoidalPath,
    SchemeRepair,
    VertexLabeling,
)

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Validation and intersection graph
# ---------------------------------------------------------------------------


def _check_walkable(g: Graph, psi: GraphoidalCover) -> None:
    for i, p in enumerate(psi.paths):
        for v in p.vertices:
            if not 0 <= v < g.order:
                raise CoverError(f"Path {i} uses vertex {v} outside 0..{g.order - 1}")
        for a, b in zip(p.vertices, p.vertices[1:]):
            if not g.has_edge(a, b):
                raise CoverError(f"Path {i} steps from {a} to {b}, which is not an edge")


def validate_cover(g: Graph, psi: GraphoidalCover) -> CoverCheck:
    """Check the three cover conditions, reporting every violation found.

    (i) each path has at least two vertices; (ii) each vertex is internal to
    at most one path; (iii) each edge lies in exactly one path.

    Raises:
        CoverError: If a path leaves the vertex range or steps along a non-edge.
    """
    _check_walkable(g, psi)
    violations: list[CoverViolation] = []

    for i, p in enumerate(psi.paths):
        if len(p.vertices) < 2:
            violations.append(
                CoverViolation(
                    condition="i",
                    message=f"Path {i} has fewer than two vertices",
                    paths=(i,),
                )
            )

    owners: dict[int, list[int]] = {}
    for i, p in enumerate(psi.paths):
        for v in p.internal_vertices:
            owners.setdefault(v, []).append(i)
    for v in sorted(owners):
        if len(owners[v]) > 1:
            violations.append(
                CoverViolation(
                    condition="ii",
                    message=f"Vertex {v} is internal to paths {owners[v]}",
                    vertex=v,
                    paths=tuple(owners[v]),
                )
            )

    carriers: dict[Edge, list[int]] = {}
    for i, p in enumerate(psi.paths):
        for e in p.edge_pairs:
            carriers.setdefault(e, []).append(i)
    for e in g.edges:
        found = carriers.get(e, [])
        if len(found) != 1:
            message = (
                f"Edge {e} is not covered" if not found else f"Edge {e} lies in paths {found}"
            )
            violations.append(
                CoverViolation(condition="iii", message=message, edge=e, paths=tuple(found))
            )
    return CoverCheck(violations=violations)


def interior_vertices(psi: GraphoidalCover) -> frozenset[int]:
    """Vertices internal to some path of psi."""
    return frozenset().union(*(p.internal_vertices for p in psi.paths))


def omega(g: Graph, psi: GraphoidalCover, warn_duplicates: bool = True) -> Graph:
    """Intersection graph of the cover: path i ~ path j iff they share a vertex.

    Paths with identical vertex sets stay separate vertices.  They are named
    in a warning, or at debug level when warn_duplicates is off (scans).

    Raises:
        CoverValidationError: If psi is not a graphoidal cover of g.
    """
    check = validate_cover(g, psi)
    if not check.ok:
        raise CoverValidationError(
            f"Invalid cover: {'; '.join(v.message for v in check.violations)}", check.violations
        )
    sets = [p.vertex_set for p in psi.paths]
    level = logging.WARNING if warn_duplicates else logging.DEBUG
    edges = []
    for j in range(len(sets)):
        for i in range(j):
            if sets[i] == sets[j]:
                shared = sorted(sets[i])
                logger.log(level, "Paths %d and %d have the same vertex set %s", i, j, shared)
            if sets[i] & sets[j]:
                edges.append((i, j))
    return Graph(order=len(sets), edges=edges)


def single_edge_cover(g: Graph) -> GraphoidalCover:
    """E(G) itself as a cover, one path per edge in edge order."""
    return GraphoidalCover(paths=tuple(GraphoidalPath(vertices=e) for e in g.edges))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _open_candidates(
    g: Graph, e: Edge, uncovered: set[Edge], internal_used: set[int]
) -> Iterator[tuple[int, ...]]:
    """Open paths through e along uncovered edges; each yielded once, e read as u -> v."""
    u, v = e

    def extensions(start: int, blocked: frozenset[int]) -> Iterator[list[int]]:
        yield []
        if start in internal_used:
            return
        for y in sorted(g.neighbors(start)):
            if y in blocked or (min(start, y), max(start, y)) not in uncovered:
                continue
            for rest in extensions(y, blocked | {y}):
                yield [y, *rest]

    for left in extensions(u, frozenset((u, v))):
        for right in extensions(v, frozenset((u, v, *left))):
            yield (*reversed(left), u, v, *right)


def _closed_candidates(
    g: Graph, e: Edge, uncovered: set[Edge], internal_used: set[int]
) -> Iterator[tuple[int, ...]]:
    """Closed paths through e, one per cycle and admissible terminal."""
    u, v = e

    def walks(seq: list[int]) -> Iterator[list[int]]:
        x = seq[-1]
        for y in sorted(g.neighbors(x)):
            if (min(x, y), max(x, y)) not in uncovered:
                continue
            if y == u and len(seq) >= 3:
                yield seq
            elif y not in seq:
                yield from walks([*seq, y])

    for body in walks([u, v]):
        busy = [w for w in body if w in internal_used]
        if len(busy) > 1:
            continue
        for t in busy or body:
            k = body.index(t)
            rotated = body[k:] + body[:k]
            yield (*rotated, t)


def enumerate_covers(
    g: Graph, cap: int | None = None, edge_cap: int | None = None
) -> list[GraphoidalCover]:
    """Every graphoidal cover of g exactly once, in a deterministic order.

    The smallest uncovered edge is placed in each admissible path in turn;
    open paths are stored smaller endpoint first, closed paths once per
    terminal.

    Args:
        g: Host graph.
        cap: Maximum number of covers (default settings.cover_count_cap).
        edge_cap: Maximum host edge count (default settings.cover_edge_cap).

    Raises:
        SizeLimitError: If g has too many edges.
        CapacityError: If more than cap covers exist.
    """
    max_edges = settings.cover_edge_cap if edge_cap is None else edge_cap
    limit = settings.cover_count_cap if cap is None else cap
    if g.edge_count > max_edges:
        raise SizeLimitError(f"{g.edge_count} edges exceed cover_edge_cap={max_edges}")

    uncovered = set(g.edges)
    internal_used: set[int] = set()
    chosen: list[GraphoidalPath] = []
    out: list[GraphoidalCover] = []

    def place() -> None:
        if not uncovered:
            out.append(GraphoidalCover(paths=tuple(chosen)))
            if len(out) > limit:
                raise CapacityError(f"More than {limit} covers", len(out) - 1)
            return
        e = min(uncovered)
        candidates = [
            *_open_candidates(g, e, uncovered, internal_used),
            *_closed_candidates(g, e, uncovered, internal_used),
        ]
        for seq in candidates:
            p = GraphoidalPath(vertices=seq).canonical()
            used = set(p.edge_pairs)
            inner = p.internal_vertices
            uncovered.difference_update(used)
            internal_used.update(inner)
            chosen.append(p)
            place()
            chosen.pop()
            internal_used.difference_update(inner)
            uncovered.update(used)

    place()
    logger.info("Host with %d edges has %d graphoidal covers", g.edge_count, len(out))
    return out


def omega_spectrum(g: Graph) -> list[tuple[Graph, int]]:
    """Distinct intersection graphs over all covers of g, with multiplicities.

    Returns:
        (canonical representative, number of covers) sorted by order, then form.
    """
    counts: dict[bytes, int] = {}
    reps: dict[bytes, Graph] = {}
    for psi in enumerate_covers(g):
        om = omega(g, psi, warn_duplicates=False)
        key = canonical_form(om)
        counts[key] = counts.get(key, 0) + 1
        if key not in reps:
            reps[key] = canonical_graph(om)
    keys = sorted(counts, key=lambda k: (reps[k].order, k))
    return [(reps[k], counts[k]) for k in keys]


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def construct_gap_instance(n: int) -> GraphoidalInstance:
    """Caterpillar whose cover has a star intersection graph K_{1,n}.

    Vertex numbering: spine v1..v_{n+2} -> 0..n+1; pendant w_i at v_i
    (i = 2..n+1) -> n+i.  Cover: the spine, then each pendant edge.

    Raises:
        GraphArgumentError: If n < 2.
    """
    if n < 2:
        raise GraphArgumentError(f"Gap instance needs n >= 2, got {n}")
    spine = list(range(n + 2))
    pendants = [(i - 1, n + i) for i in range(2, n + 2)]
    g = Graph(order=2 * n + 2, edges=[*zip(spine, spine[1:]), *pendants])
    cover = GraphoidalCover(
        paths=(
            GraphoidalPath(vertices=tuple(spine)),
            *(GraphoidalPath(vertices=e) for e in pendants),
        )
    )
    return GraphoidalInstance(name="gap", graph=g, cover=cover, parameters={"n": n})


def construct_spider_instance(x: int, p: int, t1: int, t2: int) -> GraphoidalInstance:
    """Spine with pendant paths whose cover has a spider intersection graph.

    Vertex numbering: spine v1..v_t1, w1..w_x, z1..z_t2 -> 0..t1+x+t2-1;
    then the pendant path at w_i, y_1..y_p, numbered consecutively after
    the spine, pendant by pendant.  Cover: the spine, then every pendant
    edge on its own, pendant by pendant from w_i outwards.  The
    intersection graph is a spider with x legs of p vertices each.

    Raises:
        GraphArgumentError: On x, p, t1, t2 < 1, (x, p) = (1, 1) or t1 == t2.
    """
    if min(x, p, t1, t2) < 1:
        raise GraphArgumentError("x, p, t1 and t2 must all be at least 1")
    if (x, p) == (1, 1):
        raise GraphArgumentError("(x, p) = (1, 1) gives a trivial spider")
    if t1 == t2:
        raise GraphArgumentError("t1 and t2 must differ so the spine has no flip")

    spine_len = t1 + x + t2
    spine = list(range(spine_len))
    edges: list[Edge] = list(zip(spine, spine[1:]))
    pendant_paths: list[GraphoidalPath] = []
    nxt = spine_len
    for i in range(x):
        prev = t1 + i
        for _ in range(p):
            edges.append((prev, nxt))
            pendant_paths.append(GraphoidalPath(vertices=(prev, nxt)))
            prev = nxt
            nxt += 1
    g = Graph(order=nxt, edges=edges)
    cover = GraphoidalCover(paths=(GraphoidalPath(vertices=tuple(spine)), *pendant_paths))
    return GraphoidalInstance(
        name="spider",
        graph=g,
        cover=cover,
        parameters={"x": x, "p": p, "t1": t1, "t2": t2},
        notes={"host_order": g.order, "order_claim_holds": g.order >= x * (p + 2)},
    )


def construct_cycle_instances() -> list[GraphoidalInstance]:
    """C_i covered by one closed path (i = 3, 4, 5), and C3 covered by its edges."""
    out = []
    for i in (3, 4, 5):
        c = cycle(i)
        cover = GraphoidalCover(paths=(GraphoidalPath(vertices=(*range(i), 0)),))
        out.append(GraphoidalInstance(name=f"cycle-closed-{i}", graph=c, cover=cover))
    c3 = cycle(3)
    out.append(GraphoidalInstance(name="cycle-edges-3", graph=c3, cover=single_edge_cover(c3)))
    return out


def construct_open_sharpness_example() -> GraphoidalInstance:
    """Seven open paths on a tree with a degree-3 vertex.

    Vertex numbering: v1..v9 -> 0..8; spine v1..v6, branch v5-v7-v8-v9.
    Cover: (v1,v2), (v2,v3), (v3,v4), (v4,v5), (v5,v6), (v5,v7,v8), (v8,v9).
    """
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (6, 7), (7, 8)]
    paths = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6, 7), (7, 8)]
    return GraphoidalInstance(
        name="open-sharpness",
        graph=Graph(order=9, edges=edges),
        cover=GraphoidalCover(paths=tuple(GraphoidalPath(vertices=q) for q in paths)),
        notes={"claimed_index_g": 2},
    )


# ---------------------------------------------------------------------------
# Tuple labelings and bounds
# ---------------------------------------------------------------------------


def _traversal(p: GraphoidalPath, reverse: bool) -> tuple[int, ...]:
    """Vertex order used for labeling; a reversed closed path keeps its terminal."""
    return tuple(reversed(p.vertices)) if reverse else p.vertices


def _tuple_labels(
    g: Graph,
    psi: GraphoidalCover,
    omega_labels: tuple[int, ...],
    t: int,
    open_only: bool,
    reversed_paths: frozenset[int],
) -> EdgeLabeling:
    labels = [0] * g.edge_count
    for i, p in enumerate(psi.paths):
        vs = _traversal(p, i in reversed_paths)
        for k, (a, b) in enumerate(zip(vs, vs[1:])):
            if k == 0:
                label = omega_labels[i]
            elif k == 1 or open_only:
                label = t + 1
            else:
                label = t + 2
            labels[g.edge_position(a, b)] = label
    return EdgeLabeling(labels=tuple(labels), d=t + 1 if open_only else t + 2)


def constructive_edge_labeling(
    g: Graph,
    psi: GraphoidalCover,
    omega_labeling: VertexLabeling,
    open_only: bool,
    reversed_paths: Collection[int] = (),
) -> EdgeLabeling:
    """Edge labeling built from a distinguishing labeling of Omega(G, psi).

    With t = omega_labeling.r, a path whose Omega-label is i gets, along its
    stored vertex order, (i, t+1, t+2, ..., t+2) in the general scheme or
    (i, t+1, ..., t+1) in the open scheme.  Paths whose index is in
    reversed_paths are read from their other end; a closed path then keeps
    its terminal and runs round the cycle the other way.

    Raises:
        GraphArgumentError: If omega_labeling is not distinguishing for Omega,
            open_only is set and psi has a closed path, or a reversed path
            index is out of range.
        CoverValidationError: If psi is not a cover of g.
    """
    om = omega(g, psi, warn_duplicates=False)
    if len(omega_labeling.labels) != om.order:
        raise GraphArgumentError(
            f"Omega labeling has {len(omega_labeling.labels)} labels for {om.order} paths"
        )
    if not is_distinguishing_vertex(om, omega_labeling, automorphisms(om)):
        raise GraphArgumentError("Omega labeling is not distinguishing")
    if open_only and not psi.all_open:
        raise GraphArgumentError("Open scheme requested for a cover with a closed path")
    flipped = frozenset(reversed_paths)
    outside = sorted(i for i in flipped if not 0 <= i < psi.size)
    if outside:
        raise GraphArgumentError(f"Reversed path indices {outside} outside 0..{psi.size - 1}")
    return _tuple_labels(g, psi, omega_labeling.labels, omega_labeling.r, open_only, flipped)


def _direction_choices(k: int) -> Iterator[frozenset[int]]:
    """Sets of reversed paths: stored directions first, then fewer reversals first."""
    for mask in sorted(range(1 << k), key=lambda m: (m.bit_count(), m)):
        yield frozenset(i for i in range(k) if mask >> i & 1)


def repair_constructive_labeling(
    g: Graph, psi: GraphoidalCover, open_only: bool, cap: int | None = None
) -> SchemeRepair | None:
    """Look for a tuple labeling with the same label budget that does distinguish g.

    Distinguishing labelings of Omega with D(Omega) labels are taken in
    lexicographic order and each is tried with every choice of reversed
    paths.  Every Omega candidate and every direction choice counts as one
    attempt.

    Returns:
        The first working combination, or None if none turns up within cap
        attempts (default settings.scheme_repair_cap).

    Raises:
        GraphArgumentError: If open_only is set and psi has a closed path.
    """
    limit = settings.scheme_repair_cap if cap is None else cap
    if open_only and not psi.all_open:
        raise GraphArgumentError("Open scheme requested for a cover with a closed path")
    om = omega(g, psi, warn_duplicates=False)
    aut_om = automorphisms(om)
    aut_g = automorphisms(g)
    t = distinguishing_number(om)
    directions = list(_direction_choices(psi.size))
    attempts = 0
    for candidate in itertools.product(range(1, t + 1), repeat=om.order):
        attempts += 1
        if attempts > limit:
            break
        if not is_distinguishing_vertex(om, VertexLabeling(labels=candidate, r=t), aut_om):
            continue
        for flipped in directions:
            attempts += 1
            if attempts > limit:
                break
            labeling = _tuple_labels(g, psi, candidate, t, open_only, flipped)
            if is_distinguishing_edge(g, labeling, aut_g):
                return SchemeRepair(
                    omega_labels=candidate,
                    reversed_paths=tuple(sorted(flipped)),
                    labeling=labeling,
                    attempts=attempts,
                )
    logger.debug("No tuple labeling repair within %d attempts", limit)
    return None


def _scheme_ok(g: Graph, c: EdgeLabeling, aut: AutomorphismGroup, budget: int) -> bool:
    return max(c.labels, default=1) <= budget and is_distinguishing_edge(g, c, aut)


def _index_equality_predicted(om: Graph, k: int) -> bool:
    return (
        are_isomorphic(om, cycle(4))
        or are_isomorphic(om, complete(4))
        or (k >= 2 and are_isomorphic(om, star(k - 1)))
    )


def verify_graphoidal_bounds(g: Graph, psi: GraphoidalCover) -> GraphoidalBoundsReport:
    """Evaluate the bounds linking D'(G), D(Omega) and D'(Omega) on one cover.

    The bounds on D'(Omega) apply when Omega is connected, has order >= 3 and
    is not C3 or C5.  Bounds involving D'(G) are skipped when it is undefined.
    The tuple labelings are built from the first distinguishing labeling of
    Omega; when one fails, a repair search records whether another Omega
    labeling or direction choice works.
    """
    om = omega(g, psi, warn_duplicates=False)
    k = psi.size
    index_g = distinguishing_index_or_none(g)
    witness = distinguishing_vertex_labeling(om)
    number_omega = witness.r
    index_omega = distinguishing_index_or_none(om)

    applies = (
        om.order >= 3
        and is_connected(om)
        and index_omega is not None
        and not are_isomorphic(om, cycle(3))
        and not (om.order == 5 and are_isomorphic(om, cycle(5)))
    )
    report = GraphoidalBoundsReport(
        cover_size=k,
        omega_order=om.order,
        index_g=index_g,
        number_omega=number_omega,
        index_omega=index_omega,
        index_bounds_apply=applies,
        upper_bound_holds=number_omega <= k,
        open_only=psi.all_open,
    )
    updates: dict[str, bool | None] = {}
    if applies:
        assert index_omega is not None
        updates["index_upper_holds"] = 1 <= index_omega <= k - 1
        updates["index_equality_observed"] = index_omega == k - 1
        updates["index_equality_predicted"] = _index_equality_predicted(om, k)
    if index_g is not None:
        aut_g = automorphisms(g)
        updates["lower_bound_holds"] = index_g - 2 <= number_omega
        general = constructive_edge_labeling(g, psi, witness, open_only=False)
        updates["general_scheme_ok"] = _scheme_ok(g, general, aut_g, number_omega + 2)
        closed = [i for i, p in enumerate(psi.paths) if p.closed]
        if closed:
            turned = constructive_edge_labeling(
                g, psi, witness, open_only=False, reversed_paths=closed
            )
            updates["general_scheme_reversed_ok"] = _scheme_ok(
                g, turned, aut_g, number_omega + 2
            )
        if not updates["general_scheme_ok"]:
            updates["general_scheme_repaired"] = (
                repair_constructive_labeling(g, psi, open_only=False) is not None
            )
        if psi.all_open:
            updates["open_bound_holds"] = index_g <= number_omega + 1
            opened = constructive_edge_labeling(g, psi, witness, open_only=True)
            updates["open_scheme_ok"] = _scheme_ok(g, opened, aut_g, number_omega + 1)
            if not updates["open_scheme_ok"]:
                updates["open_scheme_repaired"] = (
                    repair_constructive_labeling(g, psi, open_only=True) is not None
                )
    final = report.model_copy(update=updates)
    if final.scheme_failures:
        logger.info(
            "Tuple labeling fails to distinguish host %s under cover %s",
            g.edges,
            [p.vertices for p in psi.paths],
        )
    return final
