"""Klein four-group edge colors on cubic graphs.

An edge coloring is a plain ``dict`` mapping edge id -> :class:`KleinColor`.
Colorings that use ``W`` or repeat a color at a vertex are representable (they
show up as failure witnesses) but every algebraic operation below insists on a
proper coloring.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .gf2 import CycleBasis, EdgeSet, circular_sum, default_outer_face, face_basis
from .graph import Face, PlanarMultigraph, edge_of, twin


class KleinColor(enum.IntEnum):
    """W is the group identity; R + B = G and every element is its own inverse."""

    W = 0
    R = 1
    B = 2
    G = 3

    def __add__(self, other):
        if isinstance(other, int):
            return KleinColor(int(self) ^ int(other))
        return NotImplemented

    __radd__ = __add__

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, s: str | int) -> "KleinColor":
        if isinstance(s, int):
            return cls(s)
        s = s.strip().upper()
        if s.isdigit():
            return cls(int(s))
        return cls[s]


W, R, B, G = KleinColor.W, KleinColor.R, KleinColor.B, KleinColor.G
EDGE_COLORS = (R, B, G)

EdgeColoring = dict  # edge id -> KleinColor
FaceColoring = dict  # face id -> KleinColor


def klein_add(x: KleinColor, y: KleinColor) -> KleinColor:
    return KleinColor(int(x) ^ int(y))


def others(x: KleinColor) -> tuple[KleinColor, KleinColor]:
    """The two edge colors different from ``x`` (for x != W), in R<B<G order."""
    return tuple(c for c in EDGE_COLORS if c != x)  # type: ignore[return-value]


class ImproperColoringError(ValueError):
    def __init__(self, msg: str, vertices: Iterable[int] = ()):
        super().__init__(msg)
        self.vertices = sorted(vertices)


class NotADiscError(ValueError):
    pass


def validate_proper(h: PlanarMultigraph, col: Mapping[int, KleinColor]) -> list[int]:
    """Vertices at which ``col`` is not a proper 3-edge-coloring (empty = proper).

    A vertex is flagged if it does not have degree 3, if one of its edges is
    uncolored or white, or if two of its edges share a color.
    """
    bad = []
    for v in h.vertices:
        es = h.incident_edges(v)
        cs = [col.get(e) for e in es]
        if len(es) != 3 or any(c is None or c == W for c in cs) or len(set(cs)) != 3:
            bad.append(v)
    return bad


def is_proper(h: PlanarMultigraph, col: Mapping[int, KleinColor]) -> bool:
    return set(col) == set(h.edges) and not validate_proper(h, col)


def require_proper(h: PlanarMultigraph, col: Mapping[int, KleinColor]) -> None:
    extra = set(col) - set(h.edges)
    if extra:
        raise ImproperColoringError(f"coloring names unknown edges {sorted(extra)}")
    bad = validate_proper(h, col)
    if bad:
        raise ImproperColoringError(f"coloring is not proper at vertices {bad}", bad)


@dataclass(frozen=True)
class ColorFactors:
    one: dict[KleinColor, EdgeSet]
    two: dict[KleinColor, EdgeSet]


def factors(h: PlanarMultigraph, col: Mapping[int, KleinColor]) -> ColorFactors:
    """1-factor (edges of a color) and 2-factor (its complement) per color."""
    require_proper(h, col)
    full = EdgeSet.full(h)
    one = {x: EdgeSet(full.universe, frozenset(e for e, c in col.items() if c == x)) for x in EDGE_COLORS}
    two = {x: one[x].complement() for x in EDGE_COLORS}
    return ColorFactors(one, two)


@dataclass(frozen=True)
class Disc:
    """A cycle of the ``color`` 2-factor, listed as edges in traversal order.

    The traversal starts at the smallest edge id.
    """

    color: KleinColor
    edges: tuple[int, ...]

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    @property
    def alternating(self) -> tuple[KleinColor, KleinColor]:
        return others(self.color)

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e: int) -> bool:
        return e in self.edges


def _trace_cycles(h: PlanarMultigraph, subset: set[int]) -> list[tuple[int, ...]]:
    """Decompose a spanning 2-regular edge subset into cycles (edge sequences)."""
    at: dict[int, list[int]] = {}
    for e in subset:
        u, v = h.ends(e)
        at.setdefault(u, []).append(e)
        at.setdefault(v, []).append(e)
    bad = [v for v, es in at.items() if len(es) != 2]
    if bad:
        raise ImproperColoringError(f"subgraph is not 2-regular at vertices {sorted(bad)}", bad)
    cycles = []
    seen: set[int] = set()
    for start in sorted(subset):
        if start in seen:
            continue
        seq = [start]
        seen.add(start)
        v = h.ends(start)[1]
        e = start
        while True:
            a, b = at[v]
            nxt = b if a == e else a
            if nxt == start:
                break
            seq.append(nxt)
            seen.add(nxt)
            v = h.other_end(nxt, v)
            e = nxt
        cycles.append(tuple(seq))
    return cycles


def discs(h: PlanarMultigraph, col: Mapping[int, KleinColor], color: KleinColor) -> list[Disc]:
    """The cycles of the ``color`` 2-factor, ordered by smallest edge id."""
    color = KleinColor(color)
    if color == W:
        raise ValueError("discs exist only for R, B, G")
    require_proper(h, col)
    subset = {e for e, c in col.items() if c != color}
    return [Disc(color, cyc) for cyc in _trace_cycles(h, subset)]


def all_discs(h: PlanarMultigraph, col: Mapping[int, KleinColor]) -> list[Disc]:
    return [d for x in EDGE_COLORS for d in discs(h, col, x)]


def disc_through(
    h: PlanarMultigraph, col: Mapping[int, KleinColor], e: int, color: KleinColor
) -> Disc:
    """The disc of class ``color`` that contains edge ``e``."""
    if col[e] == color:
        raise ValueError(f"edge {e} has color {color} and lies on no {color} disc")
    for d in discs(h, col, color):
        if e in d:
            return d
    raise AssertionError("unreachable for a proper coloring")  # pragma: no cover


def coloring_from_two_factor(
    h: PlanarMultigraph, color: KleinColor, two_factor: EdgeSet | Iterable[int]
) -> dict[int, KleinColor]:
    """Extend a 2-factor of class ``color`` to a proper coloring.

    Edges outside the 2-factor get ``color``.  On each cycle the smallest edge
    gets the smaller of the two remaining colors and the rest alternate.
    """
    color = KleinColor(color)
    tf = set(two_factor.members if isinstance(two_factor, EdgeSet) else two_factor)
    if not tf <= set(h.edges):
        raise ValueError("two-factor contains unknown edges")
    lo, hi = others(color)
    col: dict[int, KleinColor] = {e: color for e in h.edges if e not in tf}
    for cyc in _trace_cycles(h, tf):
        if len(cyc) % 2:
            raise ImproperColoringError(f"odd cycle {sorted(cyc)} cannot be 2-colored")
        for i, e in enumerate(cyc):
            col[e] = lo if i % 2 == 0 else hi
    require_proper(h, col)
    return col


def rotate(h: PlanarMultigraph, col: Mapping[int, KleinColor], d: Disc) -> dict[int, KleinColor]:
    """Swap the two alternating colors along disc ``d``."""
    if not d.edges or col[d.edges[0]] == d.color:
        raise NotADiscError("disc does not belong to this coloring")
    actual = disc_through(h, col, d.edges[0], d.color)
    if actual.edge_set != d.edge_set:
        raise NotADiscError("disc does not belong to this coloring")
    return swap_along(col, d.edges, d.alternating)


def swap_along(
    col: Mapping[int, KleinColor], edges: Iterable[int], pair: tuple[KleinColor, KleinColor]
) -> dict[int, KleinColor]:
    a, b = pair
    out = dict(col)
    for e in edges:
        c = out[e]
        out[e] = b if c == a else a if c == b else c
    return out


# -- faces ------------------------------------------------------------------


class FaceColoringError(ValueError):
    pass


def face_coloring(
    h: PlanarMultigraph, col: Mapping[int, KleinColor], outer: Face | None = None
) -> dict[int, KleinColor]:
    """Color faces so that the two sides of every edge sum to its color.

    ``outer`` (default: the longest face) is colored W.  Crossing an edge adds
    the edge's color.
    """
    require_proper(h, col)
    outer = default_outer_face(h) if outer is None else outer
    fod = h.face_of_dart
    fc: dict[int, KleinColor] = {outer.id: W}
    q = deque([outer.id])
    while q:
        f = q.popleft()
        for d in h.faces[f].boundary:
            g2 = fod[twin(d)]
            c = fc[f] + col[edge_of(d)]
            if g2 in fc:
                if fc[g2] != c:
                    raise FaceColoringError(
                        f"face {g2} reached with colors {fc[g2]} and {c} across edge {edge_of(d)}"
                    )
            else:
                fc[g2] = c
                q.append(g2)
    return {f: fc[f] for f in sorted(fc)}


def shift_face_coloring(fc: Mapping[int, KleinColor], x: KleinColor) -> dict[int, KleinColor]:
    return {f: c + KleinColor(x) for f, c in fc.items()}


def edge_colors_from_faces(h: PlanarMultigraph, fc: Mapping[int, KleinColor]) -> dict[int, KleinColor]:
    """Each edge's color is the sum of the colors on its two sides."""
    fod = h.face_of_dart
    return {e: fc[fod[2 * e]] + fc[fod[2 * e + 1]] for e in h.edges}


def color_class_sums(
    h: PlanarMultigraph, fc: Mapping[int, KleinColor], basis: CycleBasis | None = None
) -> dict[KleinColor, EdgeSet]:
    """Circular sum of the face boundaries carrying each color (rim included)."""
    basis = face_basis(h) if basis is None else basis
    empty = basis.rim.empty()
    sums = {x: empty for x in KleinColor}
    for face, cyc in zip(basis.faces + (basis.outer,), basis.all_cycles()):
        sums[fc[face.id]] = sums[fc[face.id]] ^ cyc
    return sums


def cycle_color_sum_identities(
    h: PlanarMultigraph,
    fc: Mapping[int, KleinColor],
    col: Mapping[int, KleinColor],
    basis: CycleBasis | None = None,
) -> bool:
    """Check R+B = G+W, R+G = B+W and G+B = R+W for the per-color face sums.

    Each side of ``x+y = z+w`` must also equal the 2-factor of the remaining
    edge color.  Without that anchor the three equations hold for any face
    coloring whatsoever, since every edge bounds exactly two faces.
    """
    s = color_class_sums(h, fc, basis)
    two = factors(h, col).two
    pairs = ((R, B, G), (R, G, B), (G, B, R))
    return all(
        circular_sum(s[x], s[y]) == circular_sum(s[z], s[W]) == EdgeSet(s[W].universe, two[z].members)
        for x, y, z in pairs
    )
