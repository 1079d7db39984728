"""Connected multigraphs embedded on a surface by a rotation system.

Every edge ``e`` owns the two darts ``2*e`` and ``2*e + 1``; the twin of a
dart is ``d ^ 1``.  A graph value stores, for every dart, its origin vertex
and the next dart clockwise around that origin.  Faces are never stored: they
are the orbits of ``d -> rot[twin(d)]``.

All operations return new graph values; nothing here mutates its input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class GraphError(ValueError):
    """Raised for structurally invalid graphs or illegal surgeries."""


class NotSphericalError(GraphError):
    """The rotation system does not describe an embedding in the sphere."""

    def __init__(self, report: "EulerReport"):
        super().__init__(
            f"rotation system is not spherical: V={report.vertices} E={report.edges} "
            f"F={report.faces} (genus defect {report.defect})"
        )
        self.report = report


def twin(d: int) -> int:
    return d ^ 1


def edge_of(d: int) -> int:
    return d >> 1


def darts_of(e: int) -> tuple[int, int]:
    return 2 * e, 2 * e + 1


@dataclass(frozen=True)
class Face:
    """One face: a cyclic sequence of darts starting at its smallest dart."""

    id: int
    boundary: tuple[int, ...]

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(edge_of(d) for d in self.boundary)

    def __len__(self) -> int:
        return len(self.boundary)


@dataclass(frozen=True)
class EulerReport:
    vertices: int
    edges: int
    faces: int

    @property
    def characteristic(self) -> int:
        return self.vertices - self.edges + self.faces

    @property
    def defect(self) -> int:
        """Twice the genus for an orientable surface; zero on the sphere."""
        return 2 - self.characteristic

    @property
    def ok(self) -> bool:
        return self.characteristic == 2

    def __bool__(self) -> bool:
        return self.ok


class PlanarMultigraph:
    """Immutable rotation-system multigraph.

    Parameters
    ----------
    origin : mapping dart -> vertex
    rot : mapping dart -> next dart clockwise around ``origin[dart]``
    vertices : optional explicit vertex ids (defaults to the origins seen)
    require_sphere : if true (the default) the Euler check must pass

    Loops are rejected.  Parallel edges are allowed.
    """

    __slots__ = ("origin", "rot", "vertices", "__dict__")

    def __init__(
        self,
        origin: Mapping[int, int],
        rot: Mapping[int, int],
        vertices: Iterable[int] | None = None,
        *,
        require_sphere: bool = True,
        validate: bool = True,
    ):
        self.origin = dict(origin)
        self.rot = dict(rot)
        if vertices is None:
            vertices = set(self.origin.values())
        self.vertices = tuple(sorted(vertices))
        if validate:
            self._validate()
            if require_sphere:
                report = euler_check(self)
                if not report.ok:
                    raise NotSphericalError(report)

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rotations(
        cls,
        ends: Mapping[int, tuple[int, int]],
        rotations: Mapping[int, Sequence[int]],
        *,
        require_sphere: bool = True,
    ) -> "PlanarMultigraph":
        """Build from edge endpoints and per-vertex clockwise edge lists.

        ``ends[e] = (u, v)`` puts dart ``2e`` at ``u`` and ``2e+1`` at ``v``.
        """
        origin: dict[int, int] = {}
        for e, (u, v) in ends.items():
            if e < 0:
                raise GraphError(f"edge id {e} is negative")
            if u == v:
                raise GraphError(f"edge {e} is a loop at vertex {u}")
            origin[2 * e], origin[2 * e + 1] = u, v
        rot: dict[int, int] = {}
        for v, cyc in rotations.items():
            darts = []
            for e in cyc:
                if e not in ends:
                    raise GraphError(f"rotation at {v} names unknown edge {e}")
                u0, v0 = ends[e]
                if v == u0:
                    darts.append(2 * e)
                elif v == v0:
                    darts.append(2 * e + 1)
                else:
                    raise GraphError(f"edge {e} is not incident with vertex {v}")
            if len(set(darts)) != len(darts):
                raise GraphError(f"rotation at {v} repeats an edge")
            for a, b in zip(darts, darts[1:] + darts[:1]):
                rot[a] = b
        if set(rot) != set(origin):
            missing = sorted(edge_of(d) for d in set(origin) - set(rot))
            raise GraphError(f"edges missing from rotations: {missing}")
        verts = set(rotations) | set(origin.values())
        return cls(origin, rot, verts, require_sphere=require_sphere)

    @classmethod
    def from_edge_list(
        cls, ends: Mapping[int, tuple[int, int]], *, require_sphere: bool = False
    ) -> "PlanarMultigraph":
        """Rotation at each vertex is the incident edges in increasing id order."""
        rotations: dict[int, list[int]] = {}
        for e in sorted(ends):
            u, v = ends[e]
            rotations.setdefault(u, []).append(e)
            rotations.setdefault(v, []).append(e)
        return cls.from_rotations(ends, rotations, require_sphere=require_sphere)

    def _validate(self) -> None:
        if set(self.rot) != set(self.origin):
            raise GraphError("rot and origin disagree on the dart set")
        for d in self.origin:
            if twin(d) not in self.origin:
                raise GraphError(f"dart {d} has no twin")
            if self.origin[d] == self.origin[twin(d)]:
                raise GraphError(f"edge {edge_of(d)} is a loop")
        if sorted(self.rot.values()) != sorted(self.rot):
            raise GraphError("rot is not a permutation")
        seen: set[int] = set()
        for v in self.vertices:
            darts = self.darts_at.get(v, ())
            if not darts and len(self.vertices) > 1:
                raise GraphError(f"vertex {v} is isolated")
            seen.update(darts)
        if seen != set(self.origin):
            raise GraphError("rotation orbits do not match vertex origins")
        for v, darts in self.darts_at.items():
            if any(self.origin[d] != v for d in darts):
                raise GraphError(f"rotation at {v} leaves the vertex")
        if not self.is_connected():
            raise GraphError("graph is not connected")

    # -- derived structure ------------------------------------------------

    @cached_property
    def darts_at(self) -> dict[int, tuple[int, ...]]:
        """Clockwise dart cycle at every vertex, starting at its smallest dart."""
        out: dict[int, tuple[int, ...]] = {}
        done: set[int] = set()
        for d in sorted(self.rot):
            if d in done:
                continue
            cyc = [d]
            x = self.rot[d]
            while x != d:
                cyc.append(x)
                x = self.rot[x]
            done.update(cyc)
            v = self.origin[d]
            if v in out:
                raise GraphError(f"rotation at vertex {v} is not a single cycle")
            out[v] = tuple(cyc)
        return out

    @cached_property
    def edges(self) -> tuple[int, ...]:
        return tuple(sorted({edge_of(d) for d in self.origin}))

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        out = []
        done: set[int] = set()
        for d in sorted(self.rot):
            if d in done:
                continue
            cyc = [d]
            x = self.rot[twin(d)]
            while x != d:
                cyc.append(x)
                x = self.rot[twin(x)]
            done.update(cyc)
            out.append(Face(len(out), tuple(cyc)))
        return tuple(out)

    @cached_property
    def face_of_dart(self) -> dict[int, int]:
        return {d: f.id for f in self.faces for d in f.boundary}

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.origin) // 2

    def ends(self, e: int) -> tuple[int, int]:
        return self.origin[2 * e], self.origin[2 * e + 1]

    def degree(self, v: int) -> int:
        return len(self.darts_at.get(v, ()))

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return tuple(edge_of(d) for d in self.darts_at[v])

    def other_end(self, e: int, v: int) -> int:
        a, b = self.ends(e)
        return b if a == v else a

    def neighbors(self, v: int) -> set[int]:
        return {self.origin[twin(d)] for d in self.darts_at[v]}

    def has_edge_between(self, u: int, v: int) -> bool:
        return any(self.origin[twin(d)] == v for d in self.darts_at[u])

    def rotation_lists(self) -> dict[int, list[int]]:
        """Per-vertex clockwise incident edge ids."""
        return {v: [edge_of(d) for d in self.darts_at[v]] for v in self.vertices}

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        start = self.vertices[0]
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for d in self.darts_at.get(v, ()):
                w = self.origin[twin(d)]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def degree_sequence(self) -> list[int]:
        return sorted(self.degree(v) for v in self.vertices)

    def fresh_vertex(self) -> int:
        return max(self.vertices, default=-1) + 1

    def fresh_edge(self) -> int:
        return max(self.edges, default=-1) + 1

    # -- value semantics --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlanarMultigraph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.origin == other.origin
            and self.rot == other.rot
        )

    def __hash__(self) -> int:
        return hash((self.vertices, frozenset(self.rot.items())))

    def __repr__(self) -> str:
        return (
            f"PlanarMultigraph(V={self.n_vertices}, E={self.n_edges}, "
            f"F={len(self.faces)})"
        )

    def _derive(self, origin, rot, vertices, *, require_sphere=False) -> "PlanarMultigraph":
        return PlanarMultigraph(origin, rot, vertices, require_sphere=require_sphere)


# -- pure derivations -------------------------------------------------------


def faces_of(g: PlanarMultigraph) -> tuple[Face, ...]:
    """All faces, ordered by smallest dart id."""
    return g.faces


def euler_check(g: PlanarMultigraph) -> EulerReport:
    return EulerReport(g.n_vertices, g.n_edges, len(g.faces))


def is_spherical(g: PlanarMultigraph) -> bool:
    return euler_check(g).ok


def bridges(g: PlanarMultigraph) -> list[int]:
    """Edges whose removal disconnects ``g`` (parallel edges never qualify)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    found: list[int] = []
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        # frames: (vertex, edge used to enter, iterator over darts)
        stack = [(root, -1, iter(g.darts_at.get(root, ())))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for d in it:
                e = edge_of(d)
                if e == via:
                    continue
                w = g.origin[twin(d)]
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, e, iter(g.darts_at[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        found.append(via)
    return sorted(found)


def is_bridgeless(g: PlanarMultigraph) -> bool:
    return not bridges(g)


# -- surgeries --------------------------------------------------------------


def subdivide_edge(
    g: PlanarMultigraph,
    e: int,
    *,
    keep: int | None = None,
    new_vertex: int | None = None,
    new_edge: int | None = None,
    flip: bool = False,
) -> tuple[PlanarMultigraph, int, tuple[int, int]]:
    """Replace edge ``e`` by a two-edge path through a fresh degree-2 vertex.

    The dart ``keep`` of ``e`` (default ``2e``) stays at its origin ``u``; the
    other dart of ``e`` moves to the new vertex ``w``.  The new edge runs from
    ``w`` to the old far end and takes ``e``'s place in that vertex's rotation.
    With ``flip`` the new edge's odd dart sits at ``w`` instead of its even one.

    Returns ``(g', w, (e, new_edge))``.
    """
    if 2 * e not in g.origin:
        raise GraphError(f"unknown edge {e}")
    keep = 2 * e if keep is None else keep
    if edge_of(keep) != e:
        raise GraphError(f"dart {keep} does not belong to edge {e}")
    w = g.fresh_vertex() if new_vertex is None else new_vertex
    f = g.fresh_edge() if new_edge is None else new_edge
    if w in g.vertices:
        raise GraphError(f"vertex id {w} already in use")
    if 2 * f in g.origin:
        raise GraphError(f"edge id {f} already in use")
    moved = twin(keep)
    at_w, at_v = (2 * f + 1, 2 * f) if flip else (2 * f, 2 * f + 1)
    origin = dict(g.origin)
    rot = dict(g.rot)
    v = origin[moved]
    # at v, at_v replaces moved in the rotation
    pred = _pred(g, moved)
    succ = rot[moved]
    rot[pred] = at_v
    rot[at_v] = succ if succ != moved else at_v
    origin[at_v] = v
    origin[moved] = w
    origin[at_w] = w
    rot[moved] = at_w
    rot[at_w] = moved
    g2 = g._derive(origin, rot, g.vertices + (w,))
    return g2, w, (e, f)


def smooth_vertex(
    g: PlanarMultigraph, v: int, *, keep: int | None = None
) -> tuple[PlanarMultigraph, int]:
    """Merge the two edges at a degree-2 vertex into one.

    ``keep`` picks the surviving edge id (default: the smaller one).  Returns
    ``(g', merged_edge)``.
    """
    if v not in g.darts_at:
        raise GraphError(f"unknown vertex {v}")
    darts = g.darts_at[v]
    if len(darts) != 2:
        raise GraphError(f"vertex {v} has degree {len(darts)}, expected 2")
    a, b = darts
    if edge_of(a) == edge_of(b):  # pragma: no cover - loops are rejected upstream
        raise GraphError(f"vertex {v} carries a loop")
    ea, eb = edge_of(a), edge_of(b)
    if keep is None:
        keep = min(ea, eb)
    if keep not in (ea, eb):
        raise GraphError(f"edge {keep} is not incident with {v}")
    if keep == eb:
        a, b = b, a
    # a belongs to the surviving edge, b to the vanishing one
    x = g.origin[twin(b)]
    if x == g.origin[twin(a)]:
        raise GraphError(
            f"smoothing vertex {v} would create a loop at {x} (parallel edges)"
        )
    origin = dict(g.origin)
    rot = dict(g.rot)
    far = twin(b)
    pred = _pred(g, far)
    succ = rot[far]
    rot[pred] = a
    rot[a] = succ if succ != far else a
    origin[a] = x
    for d in (b, far):
        del origin[d]
        del rot[d]
    verts = tuple(u for u in g.vertices if u != v)
    return g._derive(origin, rot, verts), keep


def remove_edge(g: PlanarMultigraph, e: int) -> PlanarMultigraph:
    """Delete an edge; the result may be disconnected (validation is skipped)."""
    if 2 * e not in g.origin:
        raise GraphError(f"unknown edge {e}")
    origin = dict(g.origin)
    rot = dict(g.rot)
    for d in (2 * e, 2 * e + 1):
        p = _pred_in(rot, d)
        rot[p] = rot[d] if rot[d] != d else p
        del rot[d]
        del origin[d]
    return PlanarMultigraph(origin, rot, g.vertices, validate=False)


def add_edge_at_corners(
    g: PlanarMultigraph,
    c1: int,
    c2: int,
    *,
    new_edge: int | None = None,
    flip: bool = False,
    allow_parallel: bool = False,
) -> tuple[PlanarMultigraph, int]:
    """Join the corners ``c1`` and ``c2`` by a new edge.

    A corner is named by a dart ``c``: the new dart is placed immediately
    before ``c`` in the clockwise rotation at ``origin[c]``, i.e. inside the
    face whose boundary enters ``origin[c]`` and leaves along ``c``.  When both
    corners lie on one face that face is split in two.
    """
    f = g.fresh_edge() if new_edge is None else new_edge
    if 2 * f in g.origin:
        raise GraphError(f"edge id {f} already in use")
    for c in (c1, c2):
        if c not in g.origin:
            raise GraphError(f"unknown corner dart {c}")
    v1, v2 = g.origin[c1], g.origin[c2]
    if v1 == v2:
        raise GraphError("new edge would be a loop")
    if not allow_parallel and g.has_edge_between(v1, v2):
        raise GraphError(f"vertices {v1} and {v2} are already adjacent")
    n1, n2 = (2 * f + 1, 2 * f) if flip else (2 * f, 2 * f + 1)
    origin = dict(g.origin)
    rot = dict(g.rot)
    for n, c, v in ((n1, c1, v1), (n2, c2, v2)):
        p = _pred_in(rot, c)
        rot[p] = n
        rot[n] = c
        origin[n] = v
    return g._derive(origin, rot, g.vertices), f


def corner_on_face(g: PlanarMultigraph, face: Face, v: int) -> int:
    """The first corner dart of ``face`` at vertex ``v``."""
    for d in face.boundary:
        if g.origin[d] == v:
            return d
    raise GraphError(f"vertex {v} is not on face {face.id}")


def add_edge_in_face(
    g: PlanarMultigraph,
    v1: int,
    v2: int,
    face: Face,
    *,
    allow_parallel: bool = False,
) -> tuple[PlanarMultigraph, int]:
    """Split ``face`` by an edge between two of its boundary vertices."""
    if face.id >= len(g.faces) or g.faces[face.id] != face:
        raise GraphError("face does not belong to this graph")
    c1 = corner_on_face(g, face, v1)
    c2 = corner_on_face(g, face, v2)
    return add_edge_at_corners(g, c1, c2, allow_parallel=allow_parallel)


def dual_graph(g: PlanarMultigraph, *, require_sphere: bool = True) -> PlanarMultigraph:
    """Face-vertex dual with identical edge ids.

    Dual vertex ``i`` is face ``g.faces[i]``; dual dart ``d`` starts in the
    face containing primal dart ``d`` and the rotation there follows that
    face's boundary order.
    """
    fod = g.face_of_dart
    origin = {d: fod[d] for d in g.origin}
    rot = {d: g.rot[twin(d)] for d in g.origin}
    return PlanarMultigraph(origin, rot, range(len(g.faces)), require_sphere=require_sphere)


def _pred(g: PlanarMultigraph, d: int) -> int:
    return _pred_in(g.rot, d)


def _pred_in(rot: Mapping[int, int], d: int) -> int:
    x = d
    while rot[x] != d:
        x = rot[x]
    return x


def relabel(
    g: PlanarMultigraph,
    vertex_map: Mapping[int, int] | None = None,
    edge_map: Mapping[int, int] | None = None,
) -> PlanarMultigraph:
    """Rename vertices and/or edges (dart parity is preserved)."""
    vm = vertex_map or {}
    em = edge_map or {}

    def dm(d: int) -> int:
        e = edge_of(d)
        return 2 * em.get(e, e) + (d & 1)

    origin = {dm(d): vm.get(v, v) for d, v in g.origin.items()}
    rot = {dm(a): dm(b) for a, b in g.rot.items()}
    verts = [vm.get(v, v) for v in g.vertices]
    return PlanarMultigraph(origin, rot, verts, require_sphere=is_spherical(g))


def breadth_first_edges(g: PlanarMultigraph) -> list[int]:
    """Edges in the order a BFS from the smallest vertex first meets them."""
    order: list[int] = []
    seen_e: set[int] = set()
    seen_v = {g.vertices[0]}
    q = deque([g.vertices[0]])
    while q:
        v = q.popleft()
        for d in g.darts_at[v]:
            e = edge_of(d)
            if e not in seen_e:
                seen_e.add(e)
                order.append(e)
            w = g.origin[twin(d)]
            if w not in seen_v:
                seen_v.add(w)
                q.append(w)
    return order
