"""Spanning subgraphs as GF(2) vectors over a host graph's edges."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .graph import Face, GraphError, PlanarMultigraph, bridges


class HostMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeSet:
    """A subset of the host graph's edges.

    ``universe`` is the host's full edge-id set; two EdgeSets combine only when
    their universes agree.
    """

    universe: frozenset[int]
    members: frozenset[int]

    def __post_init__(self):
        if not self.members <= self.universe:
            extra = sorted(self.members - self.universe)
            raise HostMismatchError(f"edges {extra} are not in the host graph")

    @classmethod
    def of(cls, host: PlanarMultigraph | Iterable[int], edges: Iterable[int] = ()) -> "EdgeSet":
        universe = frozenset(host.edges if isinstance(host, PlanarMultigraph) else host)
        return cls(universe, frozenset(edges))

    @classmethod
    def full(cls, host: PlanarMultigraph) -> "EdgeSet":
        u = frozenset(host.edges)
        return cls(u, u)

    def empty(self) -> "EdgeSet":
        return EdgeSet(self.universe, frozenset())

    def _check(self, other: "EdgeSet") -> None:
        if not isinstance(other, EdgeSet):
            raise TypeError(f"expected EdgeSet, got {type(other).__name__}")
        if other.universe is not self.universe and other.universe != self.universe:
            raise HostMismatchError("edge sets belong to different host graphs")

    def __xor__(self, other: "EdgeSet") -> "EdgeSet":
        self._check(other)
        return EdgeSet(self.universe, self.members ^ other.members)

    def __or__(self, other: "EdgeSet") -> "EdgeSet":
        self._check(other)
        return EdgeSet(self.universe, self.members | other.members)

    def __and__(self, other: "EdgeSet") -> "EdgeSet":
        self._check(other)
        return EdgeSet(self.universe, self.members & other.members)

    def complement(self) -> "EdgeSet":
        return EdgeSet(self.universe, self.universe - self.members)

    def __contains__(self, e: int) -> bool:
        return e in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __bool__(self) -> bool:
        return bool(self.members)

    def vector(self) -> np.ndarray:
        """Characteristic 0/1 row over the host edges in increasing id order."""
        order = sorted(self.universe)
        return np.fromiter((e in self.members for e in order), dtype=np.uint8, count=len(order))

    def __repr__(self) -> str:
        return f"EdgeSet({sorted(self.members)})"


def circular_sum(*sets: EdgeSet) -> EdgeSet:
    """Symmetric difference of one or more edge sets on the same host."""
    if not sets:
        raise ValueError("circular_sum needs at least one edge set")
    return reduce(lambda a, b: a ^ b, sets)


def is_even_subgraph(g: PlanarMultigraph, s: EdgeSet) -> bool:
    """Every vertex meets an even number of edges of ``s``."""
    deg: Counter[int] = Counter()
    for e in s.members:
        u, v = g.ends(e)
        deg[u] += 1
        deg[v] += 1
    return all(k % 2 == 0 for k in deg.values())


@dataclass(frozen=True)
class CycleBasis:
    elementary: tuple[EdgeSet, ...]
    rim: EdgeSet
    faces: tuple[Face, ...]
    outer: Face

    def all_cycles(self) -> tuple[EdgeSet, ...]:
        return self.elementary + (self.rim,)


def default_outer_face(g: PlanarMultigraph) -> Face:
    """Longest face boundary; ties go to the smallest dart (i.e. lowest face id)."""
    return max(g.faces, key=lambda f: (len(f), -f.id))


def face_basis(g: PlanarMultigraph, outer: Face | None = None) -> CycleBasis:
    """Face boundaries as a cycle basis, with ``outer`` serving as the rim."""
    if bridges(g):
        raise GraphError("face basis needs a bridgeless graph")
    outer = default_outer_face(g) if outer is None else outer
    if outer.id >= len(g.faces) or g.faces[outer.id] != outer:
        raise GraphError("outer face does not belong to this graph")
    universe = frozenset(g.edges)
    inner = tuple(f for f in g.faces if f.id != outer.id)
    elementary = tuple(EdgeSet(universe, frozenset(f.edges)) for f in inner)
    rim = EdgeSet(universe, frozenset(outer.edges))
    return CycleBasis(elementary, rim, inner, outer)


def maclane(cycles: Sequence[EdgeSet | Iterable[int]], m: int | None = None) -> int:
    """Sum of (S_i - 1)(S_i - 2) over all edges i.

    S_i counts the given cycles that contain edge i.  Edges covered by no
    cycle contribute 2 each, so ``m`` (the host's edge count) is needed unless
    the cycles carry their host universe.
    """
    sets = [c.members if isinstance(c, EdgeSet) else frozenset(c) for c in cycles]
    if m is None:
        hosts = {c.universe for c in cycles if isinstance(c, EdgeSet)}
        if len(hosts) != 1:
            raise ValueError("edge count m is required for plain edge collections")
        m = len(next(iter(hosts)))
    s = Counter(e for c in sets for e in c)
    if len(s) > m:
        raise ValueError(f"cycles cover {len(s)} edges but m = {m}")
    covered = sum((k - 1) * (k - 2) for k in s.values())
    return covered + 2 * (m - len(s))
