"""Text formats: ``.rsg`` embedded graphs, ``.edges`` edge lists, ``.col`` colorings.

``.rsg``::

    graph prism
    vertices 10
    edges 15
    edge 1 0 1
    ...
    rotation 0: 1 4 5
    ...

``.edges`` is the ``edge`` lines alone (no embedding).  ``.col`` holds any mix
of ``color <eid> <R|B|G>``, ``face <fid> <W|R|B|G>`` and ``vcolor <vid> <0-3>``
lines.  ``#`` starts a comment everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .graph import PlanarMultigraph
from .klein import KleinColor


class FormatError(ValueError):
    pass


@dataclass
class GraphDocument:
    name: str
    graph: PlanarMultigraph


@dataclass
class ColoringDocument:
    edges: dict[int, KleinColor] = field(default_factory=dict)
    faces: dict[int, KleinColor] = field(default_factory=dict)
    vertices: dict[int, int] = field(default_factory=dict)

    @property
    def kind(self) -> str:
        kinds = [k for k in ("edges", "faces", "vertices") if getattr(self, k)]
        if len(kinds) != 1:
            raise FormatError(f"coloring document mixes or lacks sections: {kinds}")
        return kinds[0]


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _int(tok: str, lineno: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: expected an integer, got {tok!r}") from None
    if v < 0:
        raise FormatError(f"line {lineno}: ids must be non-negative")
    return v


def _parse_edges(text: str, allow_rotation: bool):
    name = "G"
    n_vertices = n_edges = None
    ends: dict[int, tuple[int, int]] = {}
    rotations: dict[int, list[int]] = {}
    for lineno, line in _lines(text):
        key, *rest = line.split()
        if key == "graph":
            name = " ".join(rest) or name
        elif key == "vertices":
            n_vertices = _int(rest[0], lineno)
        elif key == "edges":
            n_edges = _int(rest[0], lineno)
        elif key == "edge":
            if len(rest) != 3:
                raise FormatError(f"line {lineno}: expected 'edge <eid> <v1> <v2>'")
            e, u, v = (_int(t, lineno) for t in rest)
            if e in ends:
                raise FormatError(f"line {lineno}: duplicate edge id {e}")
            if u == v:
                raise FormatError(f"line {lineno}: edge {e} is a loop")
            ends[e] = (u, v)
        elif key == "rotation" and allow_rotation:
            head, _, tail = line.partition(":")
            parts = head.split()
            if len(parts) != 2 or not _:
                raise FormatError(f"line {lineno}: expected 'rotation <vid>: <eid>...'")
            v = _int(parts[1], lineno)
            if v in rotations:
                raise FormatError(f"line {lineno}: duplicate rotation for vertex {v}")
            rotations[v] = [_int(t, lineno) for t in tail.split()]
        else:
            raise FormatError(f"line {lineno}: unknown record {key!r}")
    if n_edges is not None and n_edges != len(ends):
        raise FormatError(f"header says {n_edges} edges, found {len(ends)}")
    return name, n_vertices, ends, rotations


def parse_rsg(text: str, *, require_sphere: bool = True) -> GraphDocument:
    name, n_vertices, ends, rotations = _parse_edges(text, allow_rotation=True)
    if n_vertices is not None and n_vertices != len(rotations):
        raise FormatError(f"header says {n_vertices} vertices, found {len(rotations)} rotations")
    counts: dict[int, int] = {}
    for cyc in rotations.values():
        for e in cyc:
            counts[e] = counts.get(e, 0) + 1
    wrong = sorted(e for e in ends if counts.get(e, 0) != 2)
    if wrong or set(counts) - set(ends):
        raise FormatError(f"edges not listed exactly twice across rotations: {wrong}")
    g = PlanarMultigraph.from_rotations(ends, rotations, require_sphere=require_sphere)
    return GraphDocument(name, g)


def parse_edge_list(text: str) -> GraphDocument:
    """Edge-list-only graph; the rotation at each vertex follows edge-id order."""
    name, n_vertices, ends, _ = _parse_edges(text, allow_rotation=False)
    g = PlanarMultigraph.from_edge_list(ends)
    if n_vertices is not None and n_vertices != g.n_vertices:
        raise FormatError(f"header says {n_vertices} vertices, found {g.n_vertices}")
    return GraphDocument(name, g)


def format_rsg(g: PlanarMultigraph, name: str = "G") -> str:
    out = [f"graph {name}", f"vertices {g.n_vertices}", f"edges {g.n_edges}"]
    out += [f"edge {e} {u} {v}" for e in g.edges for u, v in [g.ends(e)]]
    for v, es in g.rotation_lists().items():
        out.append(f"rotation {v}: " + " ".join(map(str, es)))
    return "\n".join(out) + "\n"


def format_edge_list(g: PlanarMultigraph, name: str = "G") -> str:
    out = [f"graph {name}"]
    out += [f"edge {e} {u} {v}" for e in g.edges for u, v in [g.ends(e)]]
    return "\n".join(out) + "\n"


def load_graph(path: str | Path, *, require_sphere: bool = True) -> GraphDocument:
    """Read ``.rsg`` or (by suffix) ``.edges``."""
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".edges":
        return parse_edge_list(text)
    return parse_rsg(text, require_sphere=require_sphere)


def parse_coloring(text: str) -> ColoringDocument:
    doc = ColoringDocument()
    for lineno, line in _lines(text):
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(f"line {lineno}: expected '<kind> <id> <color>'")
        key, ident, value = parts
        i = _int(ident, lineno)
        try:
            if key == "color":
                c = KleinColor.parse(value)
                if c == KleinColor.W:
                    raise FormatError(f"line {lineno}: edges cannot be white")
                target = doc.edges
            elif key == "face":
                c = KleinColor.parse(value)
                target = doc.faces
            elif key == "vcolor":
                c = int(value)
                if not 0 <= c <= 3:
                    raise ValueError
                target = doc.vertices
            else:
                raise FormatError(f"line {lineno}: unknown record {key!r}")
        except (KeyError, ValueError) as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"line {lineno}: bad color {value!r}") from None
        if i in target:
            raise FormatError(f"line {lineno}: duplicate {key} for id {i}")
        target[i] = c
    return doc


def format_edge_coloring(col: Mapping[int, KleinColor]) -> str:
    return "".join(f"color {e} {KleinColor(c).name}\n" for e, c in sorted(col.items()))


def format_face_coloring(fc: Mapping[int, KleinColor]) -> str:
    return "".join(f"face {f} {KleinColor(c).name}\n" for f, c in sorted(fc.items()))


def format_vertex_coloring(vc: Mapping[int, int]) -> str:
    return "".join(f"vcolor {v} {int(c)}\n" for v, c in sorted(vc.items()))


_DOT_STYLE = {
    KleinColor.R: ("red", "solid"),
    KleinColor.B: ("blue", "dotted"),
    KleinColor.G: ("green", "dashed"),
    KleinColor.W: ("black", "bold"),
}


def to_dot(
    g: PlanarMultigraph,
    col: Mapping[int, KleinColor] | None = None,
    name: str = "G",
) -> str:
    """Undirected DOT text; colored edges get ``color`` and ``style`` attributes."""
    lines = [f'graph "{name}" {{']
    lines += [f"  {v};" for v in g.vertices]
    for e in g.edges:
        u, v = g.ends(e)
        attrs = [f'label="{e}"']
        if col is not None and e in col:
            colour, style = _DOT_STYLE[KleinColor(col[e])]
            attrs += [f"color={colour}", f"style={style}"]
        lines.append(f"  {u} -- {v} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
