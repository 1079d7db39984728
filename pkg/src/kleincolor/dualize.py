"""Cubic dual of a maximal planar graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import GraphError, PlanarMultigraph, dual_graph
from .maximalize import is_simple


@dataclass(frozen=True)
class DualCorrespondence:
    """Maps between a maximal graph ``g`` and its cubic dual ``h``.

    Edge ids are shared, so ``edge_to_edge`` is the identity on ``g.edges``.
    """

    face_to_vertex: dict[int, int]
    edge_to_edge: dict[int, int]
    vertex_to_face: dict[int, int]


def check_cubic(h: PlanarMultigraph) -> bool:
    """Every vertex has degree 3, hence E = 3V/2 with V even."""
    return all(h.degree(v) == 3 for v in h.vertices) and 2 * h.n_edges == 3 * h.n_vertices


def dualize(g: PlanarMultigraph) -> tuple[PlanarMultigraph, DualCorrespondence]:
    if g.n_vertices < 3:
        raise GraphError("dualize needs at least 3 vertices")
    if not is_simple(g):
        raise GraphError("dualize needs a simple graph")
    bad = [f.id for f in g.faces if len(f) != 3]
    if bad:
        raise GraphError(f"faces {bad} are not triangles")
    h = dual_graph(g)
    corr = DualCorrespondence(
        face_to_vertex={f.id: f.id for f in g.faces},
        edge_to_edge={e: e for e in g.edges},
        vertex_to_face={v: h.face_of_dart[g.darts_at[v][0]] for v in g.vertices},
    )
    assert check_cubic(h)
    return h, corr


def cycle_matrix(g: PlanarMultigraph) -> np.ndarray:
    """Face-by-edge 0/1 matrix (columns in increasing edge id)."""
    cols = {e: i for i, e in enumerate(g.edges)}
    m = np.zeros((len(g.faces), g.n_edges), dtype=np.uint8)
    for f in g.faces:
        for e in f.edges:
            m[f.id, cols[e]] = 1
    return m


def incidence_matrix(h: PlanarMultigraph) -> np.ndarray:
    """Vertex-by-edge 0/1 matrix (rows in vertex order, columns by edge id)."""
    rows = {v: i for i, v in enumerate(h.vertices)}
    m = np.zeros((h.n_vertices, h.n_edges), dtype=np.uint8)
    for j, e in enumerate(h.edges):
        for v in h.ends(e):
            m[rows[v], j] = 1
    return m


def format_matrix(
    m: np.ndarray, row_labels: Sequence[str], col_labels: Sequence[str]
) -> str:
    """Aligned text table with blanks for zeros."""
    w = max(len(s) for s in list(col_labels) + ["1"])
    lw = max((len(s) for s in row_labels), default=0)
    lines = [" " * lw + " " + " ".join(s.rjust(w) for s in col_labels)]
    for label, row in zip(row_labels, m):
        lines.append(label.ljust(lw) + " " + " ".join(("1" if x else "").rjust(w) for x in row))
    return "\n".join(lines) + "\n"
