"""Triangulate every face of a simple embedded planar graph."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Face, GraphError, PlanarMultigraph, add_edge_at_corners, bridges, remove_edge


@dataclass(frozen=True)
class TriangulationRecord:
    original: PlanarMultigraph
    added_edges: tuple[tuple[int, Face], ...] = field(default=())

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.added_edges)


def is_simple(g: PlanarMultigraph) -> bool:
    seen = set()
    for e in g.edges:
        key = frozenset(g.ends(e))
        if key in seen:
            return False
        seen.add(key)
    return True


def triangulate(g: PlanarMultigraph) -> tuple[PlanarMultigraph, TriangulationRecord]:
    """Add chords until every face is a triangle.

    Each chord cuts off an ear: a boundary corner whose two face-neighbours
    are distinct and not yet adjacent.  Faces are handled in id order and, in a
    face, the ear at the smallest vertex id goes first.  Raises ``GraphError``
    when no ear exists rather than produce a multigraph.
    """
    if g.n_vertices < 3:
        raise GraphError("triangulation needs at least 3 vertices")
    if not is_simple(g):
        raise GraphError("triangulation needs a simple graph (parallel edges present)")
    if bridges(g):
        raise GraphError(f"triangulation needs a bridgeless graph (bridges {bridges(g)})")
    added: list[tuple[int, Face]] = []
    h = g
    while True:
        big = [f for f in h.faces if len(f) > 3]
        if not big:
            break
        face = big[0]
        bd = face.boundary
        k = len(bd)
        verts = [h.origin[d] for d in bd]
        ears = []
        for j in range(k):
            a, b = verts[j - 1], verts[(j + 1) % k]
            if a != b and not h.has_edge_between(a, b):
                ears.append((verts[j], j))
        if not ears:
            raise GraphError(f"face {face.id} has no ear that avoids a duplicate edge")
        _, j = min(ears)
        h, e = add_edge_at_corners(h, bd[j - 1], bd[(j + 1) % k])
        added.append((e, face))
    assert h.n_edges == 3 * h.n_vertices - 6
    return h, TriangulationRecord(g, tuple(added))


def untriangulate(h: PlanarMultigraph, rec: TriangulationRecord) -> PlanarMultigraph:
    """Drop the recorded chords again."""
    for e, _ in reversed(rec.added_edges):
        h = remove_edge(h, e)
    return PlanarMultigraph(h.origin, h.rot, h.vertices)
