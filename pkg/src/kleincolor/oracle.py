"""Exhaustive ground truth for desk-scale graphs.

Nothing here shares code paths with the constructive coloring in
:mod:`kleincolor.builder`; these routines only backtrack.
"""

from __future__ import annotations

from itertools import combinations
from typing import Mapping

from .graph import PlanarMultigraph, breadth_first_edges
from .klein import EDGE_COLORS, W, KleinColor


class OracleLimitError(ValueError):
    """The input is larger than the oracle is allowed to search."""


def brute_force_edge3_color(
    h: PlanarMultigraph, limit_edges: int = 40
) -> dict[int, KleinColor] | None:
    """First proper 3-edge-coloring in BFS edge order (colors tried R, B, G).

    Returns ``None`` when no proper coloring exists.
    """
    if h.n_edges > limit_edges:
        raise OracleLimitError(f"{h.n_edges} edges exceeds the oracle limit {limit_edges}")
    if any(h.degree(v) != 3 for v in h.vertices):
        raise ValueError("edge 3-coloring oracle needs a cubic graph")
    order = breadth_first_edges(h)
    used: dict[int, set[KleinColor]] = {v: set() for v in h.vertices}
    col: dict[int, KleinColor] = {}

    def place(i: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        u, v = h.ends(e)
        for c in EDGE_COLORS:
            if c in used[u] or c in used[v]:
                continue
            col[e] = c
            used[u].add(c)
            used[v].add(c)
            if place(i + 1):
                return True
            used[u].discard(c)
            used[v].discard(c)
            del col[e]
        return False

    return dict(sorted(col.items())) if place(0) else None


def brute_force_vertex4_color(
    g: PlanarMultigraph, limit_vertices: int = 20
) -> dict[int, int] | None:
    """First proper vertex coloring with labels 0..3 in BFS vertex order."""
    if g.n_vertices > limit_vertices:
        raise OracleLimitError(
            f"{g.n_vertices} vertices exceeds the oracle limit {limit_vertices}"
        )
    order: list[int] = []
    seen: set[int] = set()
    for e in breadth_first_edges(g):
        for v in g.ends(e):
            if v not in seen:
                seen.add(v)
                order.append(v)
    order += [v for v in g.vertices if v not in seen]
    nbrs = {v: g.neighbors(v) for v in g.vertices}
    col: dict[int, int] = {}

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {col[w] for w in nbrs[v] if w in col}
        for c in range(4):
            if c in taken:
                continue
            col[v] = c
            if place(i + 1):
                return True
            del col[v]
        return False

    return dict(sorted(col.items())) if place(0) else None


def simple_cycles(h: PlanarMultigraph, edges: set[int]) -> set[frozenset[int]]:
    """Every simple cycle (as an edge set) of the subgraph spanned by ``edges``."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for e in edges:
        u, v = h.ends(e)
        adj.setdefault(u, []).append((e, v))
        adj.setdefault(v, []).append((e, u))
    found: set[frozenset[int]] = set()
    for s in sorted(adj):
        # DFS over simple paths from s through vertices larger than s
        stack = [(s, [], {s})]
        while stack:
            v, path, visited = stack.pop()
            for e, w in adj[v]:
                if path and e == path[-1]:
                    continue
                if w == s and path:
                    found.add(frozenset(path + [e]))
                elif w > s and w not in visited:
                    stack.append((w, path + [e], visited | {w}))
    return found


def enumerate_discs_brute(
    h: PlanarMultigraph, col: Mapping[int, KleinColor]
) -> dict[KleinColor, set[frozenset[int]]]:
    """For each disc class, every cycle of the two-colored subgraph."""
    out: dict[KleinColor, set[frozenset[int]]] = {}
    for a, b in combinations(EDGE_COLORS, 2):
        cls = KleinColor(W + a + b)
        out[cls] = simple_cycles(h, {e for e, c in col.items() if c in (a, b)})
    return out
