"""``kleincolor`` command line.

Exit codes: 0 ok, 1 bad arguments, 2 invalid or non-spherical input, 3 bridge
or non-cubic graph where a cubic bridgeless one is required, 4 no coloring
found, 5 verification failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .builder import (
    DEFAULT_BUDGET,
    ConjectureViolation,
    color_cubic,
    generate_random,
    theorem_harness,
)
from .dualize import check_cubic, dualize
from .gf2 import face_basis, maclane
from .graph import GraphError, PlanarMultigraph, bridges, euler_check
from .io import (
    FormatError,
    format_edge_coloring,
    format_face_coloring,
    format_rsg,
    format_vertex_coloring,
    load_graph,
    parse_coloring,
    parse_edge_list,
    parse_rsg,
    to_dot,
)
from .klein import KleinColor, disc_through, rotate, validate_proper
from .maximalize import triangulate
from .oracle import OracleLimitError, brute_force_edge3_color
from .tait import ImproperVertexColoringError, four_color, vertex_conflicts

OK, BAD_ARGS, BAD_INPUT, NOT_CUBIC, NO_COLORING, VERIFY_FAILED = range(6)


class CliError(Exception):
    def __init__(self, code: int, msg: str):
        super().__init__(msg)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(BAD_ARGS, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(BAD_ARGS, f"cannot read {path}: {exc.strerror}") from None


def _load(path: str, *, sphere: bool = True, embedded: bool = True) -> PlanarMultigraph:
    text = _read(path)
    try:
        if not embedded:
            if Path(path).suffix == ".edges":
                return parse_edge_list(text).graph
            return parse_rsg(text, require_sphere=False).graph
        if Path(path).suffix == ".edges":
            raise CliError(BAD_INPUT, f"{path} has no embedding (use --no-embed)")
        return parse_rsg(text, require_sphere=sphere).graph
    except (FormatError, GraphError) as exc:
        raise CliError(BAD_INPUT, f"{path}: {exc}") from None


def _require_cubic(g: PlanarMultigraph) -> None:
    if not check_cubic(g):
        raise CliError(NOT_CUBIC, "graph is not cubic")
    if bridges(g):
        raise CliError(NOT_CUBIC, f"graph has bridges {bridges(g)}")


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _coloring(path: str):
    try:
        return parse_coloring(_read(path))
    except FormatError as exc:
        raise CliError(BAD_INPUT, f"{path}: {exc}") from None


def cmd_faces(a) -> int:
    g = _load(a.file, sphere=False)
    rep = euler_check(g)
    for f in g.faces:
        print(f"face {f.id}: " + " ".join(map(str, f.edges)))
    print(f"V={rep.vertices} E={rep.edges} F={rep.faces} V-E+F={rep.characteristic}")
    if not rep.ok:
        print(f"not spherical: genus defect {rep.defect}", file=sys.stderr)
        return BAD_INPUT
    return OK


def cmd_triangulate(a) -> int:
    g = _load(a.file)
    try:
        h, rec = triangulate(g)
    except GraphError as exc:
        raise CliError(BAD_INPUT, str(exc)) from None
    _write(format_rsg(h, Path(a.file).stem + "-maximal"), a.output)
    for e, face in rec.added_edges:
        print(f"added {e} face {face.id}")
    return OK


def cmd_dualize(a) -> int:
    g = _load(a.file)
    try:
        h, corr = dualize(g)
    except GraphError as exc:
        raise CliError(BAD_INPUT, str(exc)) from None
    _write(format_rsg(h, Path(a.file).stem + "-dual"), a.output)
    if a.map:
        lines = [f"edgemap {e} {f}" for e, f in sorted(corr.edge_to_edge.items())]
        lines += [f"facemap {f} {v}" for f, v in sorted(corr.face_to_vertex.items())]
        Path(a.map).write_text("\n".join(lines) + "\n")
    return OK


def cmd_color_edges(a) -> int:
    g = _load(a.file)
    _require_cubic(g)
    try:
        col, stats = color_cubic(g, budget=a.budget)
    except ConjectureViolation as exc:
        raise CliError(NO_COLORING, str(exc)) from None
    sys.stdout.write(format_edge_coloring(col))
    if a.stats:
        hist = " ".join(f"{c.name.lower()}={n}" for c, n in sorted(stats.case_histogram.items()))
        print(
            f"steps={stats.steps_colored} method2={stats.method2_steps} {hist} "
            f"rotations={stats.rotations_used} max_rotation_depth={stats.max_rotation_depth} "
            f"oracle_fallbacks={stats.oracle_fallbacks}",
            file=sys.stderr,
        )
    return OK


def cmd_four_color(a) -> int:
    g = _load(a.file)
    try:
        vc = four_color(g, budget=a.budget)
    except GraphError as exc:
        raise CliError(BAD_INPUT, str(exc)) from None
    except ConjectureViolation as exc:
        raise CliError(NO_COLORING, str(exc)) from None
    sys.stdout.write(format_vertex_coloring(vc))
    return OK


_KIND = {"edges": "edge", "faces": "face", "vertices": "vertex"}


def cmd_verify(a) -> int:
    g = _load(a.file, embedded=not a.no_embed)
    doc = _coloring(a.coloring)
    try:
        kind = doc.kind
    except FormatError as exc:
        raise CliError(BAD_INPUT, str(exc)) from None
    problems: list[str] = []
    if kind == "edges":
        extra = sorted(set(doc.edges) - set(g.edges))
        if extra:
            problems.append(f"unknown edges {extra}")
        problems += [f"vertex {v}" for v in validate_proper(g, doc.edges)]
    elif kind == "vertices":
        try:
            problems += [f"edge {e}" for e in vertex_conflicts(g, doc.vertices)]
        except ImproperVertexColoringError as exc:
            problems.append(str(exc))
    else:
        fc = doc.faces
        fod = g.face_of_dart
        missing = [f.id for f in g.faces if f.id not in fc]
        if missing:
            problems.append(f"faces without a color {missing}")
        else:
            problems += [
                f"edge {e}" for e in g.edges if fc[fod[2 * e]] == fc[fod[2 * e + 1]]
            ]
    if problems:
        print(f"improper {_KIND[kind]} coloring: " + ", ".join(problems))
        return VERIFY_FAILED
    print(f"proper {_KIND[kind]} coloring")
    return OK


def cmd_rotate(a) -> int:
    g = _load(a.file, embedded=not a.no_embed)
    col = _coloring(a.coloring).edges
    if validate_proper(g, col):
        raise CliError(VERIFY_FAILED, "input coloring is not proper")
    if a.edge not in col:
        raise CliError(BAD_ARGS, f"unknown edge {a.edge}")
    x = KleinColor.parse(a.cls)
    if col[a.edge] == x:
        raise CliError(BAD_ARGS, f"edge {a.edge} is colored {x.name} and lies on no {x.name} disc")
    d = disc_through(g, col, a.edge, x)
    sys.stdout.write(format_edge_coloring(rotate(g, col, d)))
    return OK


def cmd_generate(a) -> int:
    try:
        h, _ = generate_random(a.vertices, a.seed)
    except ValueError as exc:
        raise CliError(BAD_ARGS, str(exc)) from None
    _write(format_rsg(h, f"random-{a.vertices}-{a.seed}"), a.output)
    return OK


def cmd_oracle(a) -> int:
    g = _load(a.file, embedded=not a.no_embed)
    if not check_cubic(g):
        raise CliError(NOT_CUBIC, "graph is not cubic")
    try:
        col = brute_force_edge3_color(g, limit_edges=a.limit)
    except OracleLimitError as exc:
        raise CliError(BAD_ARGS, str(exc)) from None
    if col is None:
        print("NONE")
        return NO_COLORING
    sys.stdout.write(format_edge_coloring(col))
    return OK


def cmd_maclane(a) -> int:
    g = _load(a.file)
    if bridges(g):
        raise CliError(NOT_CUBIC, f"graph has bridges {bridges(g)}")
    print(maclane(face_basis(g).elementary, g.n_edges))
    return OK


def cmd_fuzz(a) -> int:
    try:
        rep = theorem_harness(a.count, a.max_vertices, a.budget, a.seed, workers=a.workers)
    except ValueError as exc:
        raise CliError(BAD_ARGS, str(exc)) from None
    sys.stdout.write(rep.format())
    return OK if rep.proper == rep.samples else NO_COLORING


def cmd_export_dot(a) -> int:
    g = _load(a.file, embedded=not a.no_embed)
    col = _coloring(a.coloring).edges if a.coloring else None
    sys.stdout.write(to_dot(g, col, Path(a.file).stem))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kleincolor", description="Planar graph coloring via the Klein four-group.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to standard error")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, fn, help_):
        s = sub.add_parser(name, help=help_)
        s.set_defaults(func=fn)
        return s

    s = cmd("faces", cmd_faces, "list faces and the Euler report")
    s.add_argument("file")
    s = cmd("triangulate", cmd_triangulate, "add chords until every face is a triangle")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s = cmd("dualize", cmd_dualize, "cubic dual of a maximal planar graph")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.add_argument("--map", help="write edgemap/facemap lines here")
    s = cmd("color-edges", cmd_color_edges, "3-edge-color a bridgeless planar cubic graph")
    s.add_argument("file")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--seed", type=int, default=0, help="accepted for symmetry; coloring is deterministic")
    s.add_argument("--stats", action="store_true")
    s = cmd("four-color", cmd_four_color, "4-color the vertices of a planar graph")
    s.add_argument("file")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s = cmd("verify", cmd_verify, "check an edge, face or vertex coloring")
    s.add_argument("file")
    s.add_argument("coloring")
    s.add_argument("--no-embed", action="store_true")
    s = cmd("rotate", cmd_rotate, "swap colors along one disc")
    s.add_argument("file")
    s.add_argument("coloring")
    s.add_argument("--edge", type=int, required=True)
    s.add_argument("--class", dest="cls", choices=["R", "B", "G"], required=True)
    s.add_argument("--no-embed", action="store_true")
    s = cmd("generate", cmd_generate, "random bridgeless planar cubic graph")
    s.add_argument("--vertices", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s = cmd("oracle", cmd_oracle, "exhaustive 3-edge-coloring")
    s.add_argument("file")
    s.add_argument("--no-embed", action="store_true", help="ignore or skip the embedding")
    s.add_argument("--limit", type=int, default=40, help="largest edge count searched")
    s = cmd("maclane", cmd_maclane, "MacLane functional of the face basis")
    s.add_argument("file")
    s = cmd("fuzz", cmd_fuzz, "color random graphs and report disc statistics")
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--max-vertices", type=int, default=30)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s = cmd("export-dot", cmd_export_dot, "Graphviz DOT text")
    s.add_argument("file")
    s.add_argument("coloring", nargs="?")
    s.add_argument("--no-embed", action="store_true")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"kleincolor: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
