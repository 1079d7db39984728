"""Build cubic graphs edge by edge from the theta graph, coloring as we go.

Two insertion moves grow a cubic graph by two vertices and three edges:

* method 1 subdivides two distinct edges on a common face and joins the new
  vertices across that face;
* method 2 subdivides one edge twice and joins the two new vertices, which
  creates a 2-gon.

:func:`reduce` runs the moves backwards down to the theta graph and records an
exact trace; :func:`color_cubic` replays the trace forward and keeps a proper
coloring at every step, rotating discs when the two linked edges do not share
one.
"""

from __future__ import annotations

import enum
import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .dualize import check_cubic
from .graph import (
    Face,
    GraphError,
    PlanarMultigraph,
    add_edge_at_corners,
    bridges,
    edge_of,
    euler_check,
    is_spherical,
    remove_edge,
    smooth_vertex,
    subdivide_edge,
    twin,
)
from .klein import (
    EDGE_COLORS,
    B,
    Disc,
    G,
    KleinColor,
    R,
    W,
    others,
    require_proper,
    swap_along,
    validate_proper,
)
from .oracle import brute_force_edge3_color

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 16
DEFAULT_MAX_STATES = 4096
FALLBACK_EDGE_LIMIT = 400

_SUCC = {R: B, B: G, G: R}


class ReductionError(GraphError):
    """No removable edge was found while reducing towards the theta graph."""


class RotationBudgetExhausted(RuntimeError):
    """Disc search gave up without finding a disc through both linked edges.

    ``graph`` is the graph after the insertion and ``witness`` colors the
    second half of each linked edge white; it is deliberately improper.
    ``complete`` is true when every coloring reachable by the allowed rotations
    was examined, so a larger budget could not have helped.
    """

    def __init__(self, graph, witness, classification, rotations, states, complete=False):
        super().__init__(
            f"no common disc through linked edges {classification.linked} "
            f"({classification.case.name}) after {rotations} forced rotations and "
            f"{states} visited colorings"
            + ("; reachable colorings exhausted" if complete else "")
        )
        self.complete = complete
        self.graph = graph
        self.witness = witness
        self.classification = classification
        self.rotations = rotations
        self.states = states


class ConjectureViolation(RuntimeError):
    """A bridgeless planar cubic graph the exhaustive oracle could not color."""


# -- steps and traces -------------------------------------------------------


@dataclass(frozen=True)
class Subdivision:
    """Arguments of one :func:`~kleincolor.graph.subdivide_edge` call."""

    edge: int
    keep: int
    vertex: int
    new_edge: int
    flip: bool = False

    def apply(self, g: PlanarMultigraph) -> PlanarMultigraph:
        g2, _, _ = subdivide_edge(
            g, self.edge, keep=self.keep, new_vertex=self.vertex,
            new_edge=self.new_edge, flip=self.flip,
        )
        return g2


@dataclass(frozen=True)
class ConstructionStep:
    kind: str  # "method1" or "method2"
    linked: tuple[int, int]
    first: Subdivision
    second: Subdivision
    created_edge: int
    corners: tuple[int, int]
    flip: bool = False


@dataclass(frozen=True)
class ConstructionTrace:
    base: PlanarMultigraph
    steps: tuple[ConstructionStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)


def apply_step(g: PlanarMultigraph, step: ConstructionStep) -> PlanarMultigraph:
    sphere = is_spherical(g)
    g = step.first.apply(g)
    g = step.second.apply(g)
    g, _ = add_edge_at_corners(
        g, *step.corners, new_edge=step.created_edge, flip=step.flip, allow_parallel=True
    )
    if sphere and not is_spherical(g):
        raise GraphError("new edge does not lie in a single face")
    return g


def replay(trace: ConstructionTrace) -> PlanarMultigraph:
    g = trace.base
    for step in trace.steps:
        g = apply_step(g, step)
    return g


def replay_all(trace: ConstructionTrace) -> list[PlanarMultigraph]:
    """The base graph followed by the graph after every step."""
    out = [trace.base]
    for step in trace.steps:
        out.append(apply_step(out[-1], step))
    return out


def theta_graph() -> tuple[PlanarMultigraph, dict[int, KleinColor]]:
    """Two vertices, three parallel edges 0, 1, 2 colored R, B, G."""
    g = PlanarMultigraph.from_rotations(
        {0: (0, 1), 1: (0, 1), 2: (0, 1)}, {0: [0, 1, 2], 1: [2, 1, 0]}
    )
    return g, canonical_theta_coloring(g)


def canonical_theta_coloring(g: PlanarMultigraph) -> dict[int, KleinColor]:
    if g.n_vertices != 2 or g.n_edges != 3:
        raise GraphError("not a theta graph")
    return dict(zip(g.edges, EDGE_COLORS))


def _corner_in_face(g: PlanarMultigraph, w: int, ref: int) -> int:
    f = g.face_of_dart[ref]
    for d in g.darts_at[w]:
        if g.face_of_dart[d] == f:
            return d
    raise GraphError(f"vertex {w} is not on the face of dart {ref}")


def _face_dart(g: PlanarMultigraph, face: Face, e: int) -> int:
    if face.id >= len(g.faces) or g.faces[face.id] != face:
        raise GraphError("face does not belong to this graph")
    for d in face.boundary:
        if edge_of(d) == e:
            return d
    raise GraphError(f"edge {e} is not on face {face.id}")


def _build(g: PlanarMultigraph, kind: str, ea: int, eb: int | None, ref: int):
    w1, f1 = g.fresh_vertex(), g.fresh_edge()
    first = Subdivision(ea, 2 * ea, w1, f1)
    g1 = first.apply(g)
    if kind == "method1":
        second = Subdivision(eb, 2 * eb, w1 + 1, f1 + 1)
    else:
        second = Subdivision(f1, 2 * f1, w1 + 1, f1 + 1)
    g2 = second.apply(g1)
    corners = (_corner_in_face(g2, w1, ref), _corner_in_face(g2, w1 + 1, ref))
    step = ConstructionStep(
        kind, (ea, ea if eb is None else eb), first, second, f1 + 2, corners
    )
    return apply_step(g, step), step


def apply_method1(
    g: PlanarMultigraph, ea: int, eb: int, face: Face
) -> tuple[PlanarMultigraph, ConstructionStep]:
    """Subdivide ``ea`` and ``eb`` and join the new vertices across ``face``."""
    if ea == eb:
        raise GraphError("method 1 needs two distinct edges")
    ref = _face_dart(g, face, ea)
    _face_dart(g, face, eb)
    return _build(g, "method1", ea, eb, ref)


def apply_method2(
    g: PlanarMultigraph, e: int, face: Face | None = None
) -> tuple[PlanarMultigraph, ConstructionStep]:
    """Subdivide ``e`` twice and join the two new vertices inside ``face``.

    ``face`` defaults to the face on the side of dart ``2e``.
    """
    if 2 * e not in g.origin:
        raise GraphError(f"unknown edge {e}")
    ref = 2 * e if face is None else _face_dart(g, face, e)
    return _build(g, "method2", e, None, ref)


# -- reduction ----------------------------------------------------------------


def _unsmooth_record(g: PlanarMultigraph, v: int, kept: int) -> Subdivision:
    """The subdivision that restores vertex ``v`` after smoothing keeps ``kept``."""
    a, b = g.darts_at[v]
    m, n = (a, b) if edge_of(a) == kept else (b, a)
    return Subdivision(kept, twin(m), v, edge_of(n), flip=bool(n & 1))


def _try_remove(g: PlanarMultigraph, e: int):
    p, q = g.ends(e)
    de = 2 * e
    cp, cq = g.rot[de], g.rot[de + 1]
    g1 = remove_edge(g, e)
    try:
        keep_p = min(edge_of(d) for d in g1.darts_at[p])
        rec_p = _unsmooth_record(g1, p, keep_p)
        g2, _ = smooth_vertex(g1, p, keep=keep_p)
        keep_q = min(edge_of(d) for d in g2.darts_at[q])
        rec_q = _unsmooth_record(g2, q, keep_q)
        g3, _ = smooth_vertex(g2, q, keep=keep_q)
    except GraphError:
        return None
    if bridges(g3) or not check_cubic(g3) or not euler_check(g3).ok:
        return None
    first, second = rec_q, rec_p
    if second.edge in (first.edge, first.new_edge):
        kind, linked = "method2", (first.edge, first.edge)
    else:
        kind, linked = "method1", (first.edge, second.edge)
    step = ConstructionStep(kind, linked, first, second, e, (cp, cq), flip=False)
    return g3, step


def reduce(h: PlanarMultigraph) -> ConstructionTrace:
    """Strip edges (lowest usable id first) down to the theta graph.

    Every intermediate graph stays loop-free, bridgeless, cubic and spherical.
    ``replay(reduce(h)) == h`` exactly, ids included.
    """
    _require_cubic_input(h)
    steps: list[ConstructionStep] = []
    g = h
    while g.n_vertices > 2:
        for e in g.edges:
            res = _try_remove(g, e)
            if res is not None:
                g, step = res
                steps.append(step)
                break
        else:
            raise ReductionError(
                f"no removable edge in a bridgeless cubic graph with {g.n_vertices} vertices"
            )
    return ConstructionTrace(g, tuple(reversed(steps)))


def _require_cubic_input(h: PlanarMultigraph) -> None:
    if not check_cubic(h):
        raise GraphError("graph is not cubic")
    if bridges(h):
        raise GraphError(f"graph has bridges {bridges(h)}")
    report = euler_check(h)
    if not report.ok:
        raise GraphError(f"graph is not spherical (defect {report.defect})")


# -- linked pair analysis -------------------------------------------------------


class LinkedPairCase(enum.IntEnum):
    CASE1 = 1  # a disc contains both linked edges
    CASE2 = 2  # different colors; one rotation of a third-class disc gives case 1
    CASE3 = 3  # same color; no shared disc in either available class
    CASE4 = 4  # different colors; no single rotation gives case 1


@dataclass(frozen=True)
class LinkedPairClassification:
    case: LinkedPairCase
    linked: tuple[int, int]
    discs: tuple[Disc, ...]
    rotation: Disc | None = None

    @property
    def common(self) -> Disc | None:
        return self.discs[0] if self.case == LinkedPairCase.CASE1 else None


def _edge_at(h: PlanarMultigraph, col: Mapping[int, KleinColor], v: int, c: KleinColor) -> int:
    for e in h.incident_edges(v):
        if col[e] == c:
            return e
    raise ValueError(f"vertex {v} has no edge colored {c}")


def _walk_disc(h: PlanarMultigraph, col: Mapping[int, KleinColor], e: int, x: KleinColor) -> Disc:
    """Disc of class ``x`` through ``e``, listed from its smallest edge."""
    y, z = others(x)
    seq = [e]
    v = h.ends(e)[1]
    cur = e
    while True:
        want = z if col[cur] == y else y
        nxt = _edge_at(h, col, v, want)
        if nxt == e:
            break
        seq.append(nxt)
        v = h.other_end(nxt, v)
        cur = nxt
    start = seq.index(min(seq))
    seq = seq[start:] + seq[:start]
    # same orientation as klein.discs: leave the smallest edge by its second end
    if len(seq) > 2 and h.ends(seq[0])[1] not in h.ends(seq[1]):
        seq = [seq[0]] + seq[:0:-1]
    return Disc(x, tuple(seq))


def _common_discs(h, col, ea, eb) -> list[Disc]:
    out = []
    for x in EDGE_COLORS:
        if x in (col[ea], col[eb]):
            continue
        d = _walk_disc(h, col, ea, x)
        if eb in d.edge_set:
            out.append(d)
    return out


def _common_disc(h, col, ea, eb) -> Disc | None:
    for x in EDGE_COLORS:
        if x in (col[ea], col[eb]):
            continue
        d = _walk_disc(h, col, ea, x)
        if eb in d.edge_set:
            return d
    return None


def classify_linked_pair(
    h: PlanarMultigraph, col: Mapping[int, KleinColor], ea: int, eb: int
) -> LinkedPairClassification:
    """Which of the four linked-pair configurations ``(ea, eb)`` is in.

    Witness discs: case 1 every common disc (two when the edges share a color); cases 2 and 4 the two discs of the
    third color class through ``ea`` and ``eb``; case 3 the four discs through
    them (``ea``'s two classes, then ``eb``'s).
    """
    linked = (ea, eb)
    common = _common_discs(h, col, ea, eb)
    if common:
        return LinkedPairClassification(LinkedPairCase.CASE1, linked, tuple(common))
    a, b = col[ea], col[eb]
    if a != b:
        x = KleinColor(a + b)
        da, db = _walk_disc(h, col, ea, x), _walk_disc(h, col, eb, x)
        for d in (da, db):
            if _common_disc(h, _rotate(col, d), ea, eb) is not None:
                return LinkedPairClassification(LinkedPairCase.CASE2, linked, (da, db), d)
        return LinkedPairClassification(LinkedPairCase.CASE4, linked, (da, db))
    ws = tuple(_walk_disc(h, col, e, x) for e in (ea, eb) for x in others(a))
    return LinkedPairClassification(LinkedPairCase.CASE3, linked, ws)


def _rotate(col: Mapping[int, KleinColor], d: Disc) -> dict[int, KleinColor]:
    return swap_along(col, d.edges, d.alternating)


def _fingerprint(col: Mapping[int, KleinColor]) -> bytes:
    return bytes(int(col[e]) for e in sorted(col))


@dataclass(frozen=True)
class SearchResult:
    path: list[Disc] | None
    visited: int
    complete: bool  # every coloring reachable within the depth budget was seen


def search_rotations(
    h: PlanarMultigraph,
    col: Mapping[int, KleinColor],
    ea: int,
    eb: int,
    budget: int,
    max_states: int = DEFAULT_MAX_STATES,
) -> SearchResult:
    """Breadth-first search over rotations of discs through ``ea`` or ``eb``.

    ``path`` is the shortest list of rotations (at most ``budget``) after which
    one disc contains both edges, or ``None``.  Colorings are deduplicated, and
    the search stops after ``max_states`` distinct colorings.
    """
    start = dict(col)
    if _common_disc(h, start, ea, eb) is not None:
        return SearchResult([], 1, True)
    seen = {_fingerprint(start)}
    frontier = deque([(start, [])])
    truncated = False
    while frontier:
        cur, path = frontier.popleft()
        if len(path) >= budget:
            truncated = True
            continue
        cands: dict[tuple, Disc] = {}
        for e in (ea, eb):
            for x in others(cur[e]):
                d = _walk_disc(h, cur, e, x)
                cands.setdefault((x, d.edges), d)
        for d in cands.values():
            nxt = _rotate(cur, d)
            fp = _fingerprint(nxt)
            if fp in seen:
                continue
            seen.add(fp)
            if _common_disc(h, nxt, ea, eb) is not None:
                return SearchResult(path + [d], len(seen), False)
            if len(seen) >= max_states:
                return SearchResult(None, len(seen), False)
            frontier.append((nxt, path + [d]))
    return SearchResult(None, len(seen), not truncated)


@dataclass(frozen=True)
class InsertReport:
    case: LinkedPairCase | None  # None for method 2
    rotations: int
    states: int = 0


def _white_witness(col, step: ConstructionStep, a: KleinColor, b: KleinColor):
    witness = dict(col)
    witness[step.first.new_edge] = W
    witness[step.second.new_edge] = W
    witness[step.created_edge] = min(c for c in EDGE_COLORS if c not in (a, b))
    return witness


def insert_and_color(
    h: PlanarMultigraph,
    col: Mapping[int, KleinColor],
    step: ConstructionStep,
    *,
    budget: int = DEFAULT_BUDGET,
    max_states: int = DEFAULT_MAX_STATES,
) -> tuple[PlanarMultigraph, dict[int, KleinColor], InsertReport]:
    """Apply ``step`` to ``h`` and extend the proper coloring ``col``.

    Method 2 is colored locally.  Method 1 needs a disc through both linked
    edges: case 2 and case 4 spend one rotation first, case 3 searches.  The
    disc, lengthened by the two new vertices, splits into two arcs; the colors
    on the arc that starts with the first linked edge's new half are swapped and
    the new edge takes the disc's own color.

    Raises :class:`RotationBudgetExhausted` when no common disc is reachable
    within ``budget`` rotations.
    """
    require_proper(h, col)
    h2 = apply_step(h, step)
    if step.kind == "method2":
        return h2, _color_method2(h2, col, step), InsertReport(None, 0)

    ea, eb = step.linked
    cls = classify_linked_pair(h, col, ea, eb)
    cur = dict(col)
    rotations = 0
    states = 0
    if cls.case in (LinkedPairCase.CASE2, LinkedPairCase.CASE4):
        if budget < 1:
            raise RotationBudgetExhausted(
                h2, _white_witness(col, step, col[ea], col[eb]), cls, 0, 0
            )
        d = cls.rotation if cls.case == LinkedPairCase.CASE2 else cls.discs[0]
        cur = _rotate(cur, d)
        rotations = 1
    disc = _common_disc(h, cur, ea, eb)
    if disc is None:
        res = search_rotations(h, cur, ea, eb, budget - rotations, max_states)
        states = res.visited
        if res.path is None:
            raise RotationBudgetExhausted(
                h2, _white_witness(col, step, col[ea], col[eb]), cls, rotations, states,
                complete=res.complete,
            )
        for d in res.path:
            cur = _rotate(cur, d)
        rotations += len(res.path)
        disc = _common_disc(h, cur, ea, eb)
    assert disc is not None
    col2 = _split_disc(h2, cur, step, disc)
    return h2, col2, InsertReport(cls.case, rotations, states)


def _split_disc(h2: PlanarMultigraph, col, step: ConstructionStep, disc: Disc):
    out = dict(col)
    out[step.first.new_edge] = col[step.first.edge]
    out[step.second.new_edge] = col[step.second.edge]
    ring = disc.edge_set | {step.first.new_edge, step.second.new_edge}
    wa, wb = step.first.vertex, step.second.vertex
    arc = []
    e, v = step.first.new_edge, h2.other_end(step.first.new_edge, wa)
    arc.append(e)
    while v != wb:
        e = next(f for f in h2.incident_edges(v) if f in ring and f != e)
        arc.append(e)
        v = h2.other_end(e, v)
    out = swap_along(out, arc, disc.alternating)
    out[step.created_edge] = disc.color
    require_proper(h2, out)
    return out


def _color_method2(h2: PlanarMultigraph, col, step: ConstructionStep):
    e = step.linked[0]
    a = col[e]
    w1, w2 = step.first.vertex, step.second.vertex
    segments = {step.first.edge, step.first.new_edge, step.second.new_edge}
    out = {k: c for k, c in col.items() if k != e}
    mid = _SUCC[a]
    for s in segments:
        out[s] = mid if set(h2.ends(s)) == {w1, w2} else a
    out[step.created_edge] = KleinColor(a + mid)
    require_proper(h2, out)
    return out


# -- whole-graph coloring ---------------------------------------------------------


@dataclass
class BuildStats:
    steps_colored: int = 0
    case_histogram: Counter = field(default_factory=Counter)
    method2_steps: int = 0
    rotations_used: int = 0
    max_rotation_depth: int = 0
    oracle_fallbacks: int = 0
    # fallbacks where every coloring reachable by the allowed rotations was tried
    fallbacks_space_exhausted: int = 0

    def record(self, rep: InsertReport) -> None:
        self.steps_colored += 1
        if rep.case is None:
            self.method2_steps += 1
        else:
            self.case_histogram[rep.case] += 1
        self.rotations_used += rep.rotations
        self.max_rotation_depth = max(self.max_rotation_depth, rep.rotations)

    def merge(self, other: "BuildStats") -> None:
        self.steps_colored += other.steps_colored
        self.case_histogram.update(other.case_histogram)
        self.method2_steps += other.method2_steps
        self.rotations_used += other.rotations_used
        self.max_rotation_depth = max(self.max_rotation_depth, other.max_rotation_depth)
        self.oracle_fallbacks += other.oracle_fallbacks
        self.fallbacks_space_exhausted += other.fallbacks_space_exhausted


def color_cubic(
    h: PlanarMultigraph,
    *,
    budget: int = DEFAULT_BUDGET,
    max_states: int = DEFAULT_MAX_STATES,
    fallback: bool = True,
) -> tuple[dict[int, KleinColor], BuildStats]:
    """Properly 3-edge-color a bridgeless spherical cubic graph.

    If a step exhausts its rotation budget the whole intermediate graph is
    recolored by the exhaustive oracle (counted in ``oracle_fallbacks``); with
    ``fallback=False`` the exhaustion propagates instead.
    """
    trace = reduce(h)
    g = trace.base
    col = canonical_theta_coloring(g)
    stats = BuildStats()
    for step in trace.steps:
        try:
            g, col, rep = insert_and_color(g, col, step, budget=budget, max_states=max_states)
        except RotationBudgetExhausted as exc:
            if not fallback:
                raise
            g = exc.graph
            log.info("rotation budget exhausted at |V|=%d; oracle fallback", g.n_vertices)
            found = brute_force_edge3_color(g, limit_edges=max(FALLBACK_EDGE_LIMIT, g.n_edges))
            if found is None:
                raise ConjectureViolation(
                    f"exhaustive search found no 3-edge-coloring of a bridgeless planar "
                    f"cubic graph with {g.n_vertices} vertices"
                ) from exc
            col = found
            stats.oracle_fallbacks += 1
            stats.fallbacks_space_exhausted += int(exc.complete)
            stats.case_histogram[exc.classification.case] += 1
            stats.steps_colored += 1
            continue
        stats.record(rep)
    assert g == h
    require_proper(h, col)
    return dict(sorted(col.items())), stats


# -- random generation -------------------------------------------------------------


def generate_random(
    n_vertices: int, seed: int | np.random.Generator | None = None, *, method1_prob: float = 0.75
) -> tuple[PlanarMultigraph, ConstructionTrace]:
    """Random bridgeless spherical cubic multigraph grown from the theta graph."""
    if n_vertices < 2 or n_vertices % 2:
        raise ValueError(f"vertex count must be even and at least 2, got {n_vertices}")
    rng = np.random.default_rng(seed)
    g, _ = theta_graph()
    base = g
    steps = []
    while g.n_vertices < n_vertices:
        if rng.random() < method1_prob:
            face = g.faces[rng.integers(len(g.faces))]
            i, j = rng.choice(len(face), size=2, replace=False)
            g, step = apply_method1(g, face.edges[i], face.edges[j], face)
        else:
            e = g.edges[rng.integers(g.n_edges)]
            d = 2 * e + int(rng.integers(2))
            g, step = apply_method2(g, e, g.faces[g.face_of_dart[d]])
        steps.append(step)
    return g, ConstructionTrace(base, tuple(steps))


# -- theorem harness ---------------------------------------------------------------


@dataclass
class HarnessReport:
    samples: int
    proper: int
    stats: BuildStats
    vertex_counts: list[int]

    def as_dict(self) -> dict[str, int]:
        hist = self.stats.case_histogram
        out = {"samples": self.samples, "proper": self.proper}
        for case in LinkedPairCase:
            out[case.name.lower()] = hist.get(case, 0)
        out.update(
            method2_steps=self.stats.method2_steps,
            rotations_used=self.stats.rotations_used,
            max_rotation_depth=self.stats.max_rotation_depth,
            oracle_fallbacks=self.stats.oracle_fallbacks,
            fallbacks_space_exhausted=self.stats.fallbacks_space_exhausted,
        )
        return out

    def format(self) -> str:
        d = self.as_dict()
        lines = [f"{k}={v}" for k, v in d.items()]
        total = sum(d[c.name.lower()] for c in LinkedPairCase) or 1
        lines += ["", f"{'case':<8}{'steps':>8}{'share':>9}"]
        for c in LinkedPairCase:
            n = d[c.name.lower()]
            lines.append(f"{c.name.lower():<8}{n:>8}{100 * n / total:>8.2f}%")
        if self.vertex_counts:
            lines.append(
                f"vertices min={min(self.vertex_counts)} max={max(self.vertex_counts)} "
                f"mean={sum(self.vertex_counts) / len(self.vertex_counts):.1f}"
            )
        return "\n".join(lines) + "\n"


def _harness_sample(args):
    n, seed, budget, max_states = args
    h, _ = generate_random(n, seed)
    col, stats = color_cubic(h, budget=budget, max_states=max_states)
    return n, not validate_proper(h, col), stats


def theorem_harness(
    sample_count: int,
    max_vertices: int,
    budget: int = DEFAULT_BUDGET,
    seed: int | None = 0,
    *,
    max_states: int = DEFAULT_MAX_STATES,
    workers: int = 1,
) -> HarnessReport:
    """Color ``sample_count`` random cubic graphs and aggregate the statistics.

    Sample ``i`` has an even vertex count drawn uniformly from ``2..max_vertices``
    and its own child seed, so results do not depend on ``workers``.
    """
    if max_vertices < 2:
        raise ValueError("max_vertices must be at least 2")
    ss = np.random.SeedSequence(seed)
    rng = np.random.default_rng(ss)
    counts = 2 * rng.integers(1, max_vertices // 2 + 1, size=sample_count)
    seeds = [int(c.generate_state(1)[0]) for c in ss.spawn(sample_count)]
    jobs = [(int(n), s, budget, max_states) for n, s in zip(counts, seeds)]
    if workers > 1 and sample_count > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_harness_sample, jobs, chunksize=8))
    else:
        results = [_harness_sample(j) for j in jobs]
    total = BuildStats()
    proper = 0
    for _, ok, stats in results:
        total.merge(stats)
        proper += ok
    return HarnessReport(sample_count, proper, total, [n for n, _, _ in results])
