"""Four-color the vertices of a planar graph through its cubic dual.

A vertex of a maximal planar graph ``g`` is a face of its dual ``h``.  A proper
3-edge-coloring of ``h`` gives a Klein face coloring in which the two faces on
either side of an edge differ by that edge's (non-white) color, so adjacent
vertices of ``g`` always receive different labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .builder import DEFAULT_BUDGET, BuildStats, color_cubic
from .dualize import DualCorrespondence, dualize
from .graph import GraphError, PlanarMultigraph
from .klein import KleinColor, face_coloring
from .maximalize import triangulate


class ImproperVertexColoringError(ValueError):
    def __init__(self, msg: str, edges: list[int]):
        super().__init__(msg)
        self.edges = edges


def vertex_conflicts(g: PlanarMultigraph, vc: Mapping[int, int]) -> list[int]:
    """Edges whose ends share a label, plus missing or out-of-range labels as errors."""
    missing = [v for v in g.vertices if v not in vc]
    if missing:
        raise ImproperVertexColoringError(f"vertices without a color: {missing}", [])
    bad = sorted(v for v in g.vertices if not 0 <= int(vc[v]) <= 3)
    if bad:
        raise ImproperVertexColoringError(f"labels outside 0..3 at vertices {bad}", [])
    return [e for e in g.edges if vc[g.ends(e)[0]] == vc[g.ends(e)[1]]]


def is_proper_vertex_coloring(g: PlanarMultigraph, vc: Mapping[int, int]) -> bool:
    try:
        return not vertex_conflicts(g, vc)
    except ImproperVertexColoringError:
        return False


def face_colors_to_vertex_colors(
    g: PlanarMultigraph,
    h: PlanarMultigraph,
    corr: DualCorrespondence,
    fc: Mapping[int, KleinColor],
) -> dict[int, int]:
    if set(corr.vertex_to_face) != set(g.vertices):
        raise GraphError("correspondence does not cover the vertices of the primal graph")
    if set(corr.vertex_to_face.values()) != {f.id for f in h.faces}:
        raise GraphError("correspondence does not cover the faces of the dual graph")
    vc = {v: int(fc[corr.vertex_to_face[v]]) for v in g.vertices}
    bad = vertex_conflicts(g, vc)
    if bad:
        raise ImproperVertexColoringError(f"face coloring clashes across edges {bad}", bad)
    return vc


@dataclass
class FourColorResult:
    coloring: dict[int, int]
    maximal: PlanarMultigraph
    dual: PlanarMultigraph
    stats: BuildStats


def four_color_detailed(g: PlanarMultigraph, *, budget: int = DEFAULT_BUDGET) -> FourColorResult:
    maximal, _ = triangulate(g)
    h, corr = dualize(maximal)
    col, stats = color_cubic(h, budget=budget)
    fc = face_coloring(h, col)
    vc = face_colors_to_vertex_colors(maximal, h, corr, fc)
    # the added chords only add constraints, so the restriction stays proper
    out = {v: vc[v] for v in g.vertices}
    assert not vertex_conflicts(g, out)
    return FourColorResult(out, maximal, h, stats)


def four_color(g: PlanarMultigraph, *, budget: int = DEFAULT_BUDGET) -> dict[int, int]:
    """Proper vertex coloring of ``g`` with labels in 0..3."""
    return four_color_detailed(g, budget=budget).coloring
