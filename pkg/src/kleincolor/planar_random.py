"""Random simple bridgeless planar graphs with an embedding, for testing."""

from __future__ import annotations

import numpy as np
from scipy.spatial import Delaunay

from .graph import PlanarMultigraph, bridges, remove_edge


def delaunay_graph(points: np.ndarray) -> PlanarMultigraph:
    """Delaunay triangulation of 2-d points; rotations follow the angular order."""
    pts = np.asarray(points, dtype=float)
    if len(pts) < 3:
        raise ValueError("need at least 3 points")
    tri = Delaunay(pts)
    pairs = set()
    for a, b, c in tri.simplices:
        for u, v in ((a, b), (b, c), (c, a)):
            pairs.add((int(min(u, v)), int(max(u, v))))
    ends = {i: p for i, p in enumerate(sorted(pairs))}
    around: dict[int, list[tuple[float, int]]] = {v: [] for v in range(len(pts))}
    for e, (u, v) in ends.items():
        for x, y in ((u, v), (v, u)):
            dx, dy = pts[y] - pts[x]
            around[x].append((-np.arctan2(dy, dx), e))  # clockwise
    rotations = {v: [e for _, e in sorted(lst)] for v, lst in around.items()}
    return PlanarMultigraph.from_rotations(ends, rotations)


def random_planar_graph(
    n_vertices: int,
    seed: int | np.random.Generator | None = None,
    *,
    deletions: float = 0.3,
) -> PlanarMultigraph:
    """Delaunay graph of random points with a share of its edges removed.

    Edges are tried in random order and removed only when the graph stays
    bridgeless, so the result is simple, connected and bridgeless.
    """
    rng = np.random.default_rng(seed)
    g = delaunay_graph(rng.random((n_vertices, 2)))
    target = int(deletions * g.n_edges)
    removed = 0
    for e in rng.permutation(g.edges):
        if removed >= target:
            break
        cand = remove_edge(g, int(e))
        if min(cand.degree(v) for v in cand.vertices) < 2:
            continue
        cand = PlanarMultigraph(cand.origin, cand.rot, cand.vertices, validate=False)
        if not cand.is_connected() or bridges(cand):
            continue
        g = PlanarMultigraph(cand.origin, cand.rot, cand.vertices)
        removed += 1
    return g
