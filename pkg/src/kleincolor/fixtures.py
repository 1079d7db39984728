"""The shipped graph corpus.

Edge ids in the prism and Petersen files are the subscripts of the ``u_k``
labels used throughout, so ``PRISM_FACES["c1"]`` can be compared directly
against face boundaries.
"""

from __future__ import annotations

from importlib import resources

from .graph import Face, PlanarMultigraph, dual_graph
from .io import parse_coloring, parse_edge_list, parse_rsg
from .klein import KleinColor

PRISM_FACES: dict[str, frozenset[int]] = {
    "c1": frozenset({1, 2, 5, 11}),
    "c2": frozenset({4, 5, 7, 13}),
    "c3": frozenset({6, 7, 9, 14}),
    "c4": frozenset({8, 9, 10, 15}),
    "c5": frozenset({2, 3, 10, 12}),
    "c6": frozenset({11, 12, 13, 14, 15}),
    "c0": frozenset({1, 3, 4, 6, 8}),
}

# the twelve 5-cycles of the Petersen graph under the u_k labelling
PETERSEN_CYCLES: dict[str, frozenset[int]] = {
    "c1": frozenset({1, 2, 4, 6, 8}),
    "c2": frozenset({1, 2, 5, 10, 14}),
    "c3": frozenset({1, 3, 4, 7, 11}),
    "c4": frozenset({1, 3, 5, 12, 13}),
    "c5": frozenset({2, 3, 10, 11, 15}),
    "c6": frozenset({2, 3, 8, 9, 12}),
    "c7": frozenset({4, 5, 6, 9, 13}),
    "c8": frozenset({4, 5, 7, 14, 15}),
    "c9": frozenset({6, 7, 9, 11, 12}),
    "c10": frozenset({6, 7, 8, 10, 15}),
    "c11": frozenset({8, 9, 10, 13, 14}),
    "c12": frozenset({11, 12, 13, 14, 15}),
}
PETERSEN_BASIS = ("c1", "c3", "c5", "c6", "c8", "c12")

# cycle matrix rows of the bipyramid, edges a..i stored as ids 0..8
BIPYRAMID_FACES: dict[str, frozenset[int]] = {
    name: frozenset(ord(ch) - ord("a") for ch in letters)
    for name, letters in {
        "c1": "abc", "c2": "bde", "c3": "cfg", "c4": "egh", "c5": "dhi", "c6": "afi",
    }.items()
}


def _text(name: str) -> str:
    return resources.files("kleincolor").joinpath("data").joinpath(name).read_text()


def data_path(name: str):
    """Filesystem path of a shipped data file (for the CLI and docs)."""
    return resources.files("kleincolor").joinpath("data").joinpath(name)


def theta() -> PlanarMultigraph:
    return parse_rsg(_text("theta.rsg")).graph


def triangle() -> PlanarMultigraph:
    return parse_rsg(_text("triangle.rsg")).graph


def k4() -> PlanarMultigraph:
    return parse_rsg(_text("k4.rsg")).graph


def prism() -> PlanarMultigraph:
    return parse_rsg(_text("prism.rsg")).graph


def prism_coloring() -> dict[int, KleinColor]:
    return parse_coloring(_text("prism.col")).edges


def bipyramid() -> PlanarMultigraph:
    return parse_rsg(_text("bipyramid.rsg")).graph


def petersen() -> PlanarMultigraph:
    return parse_edge_list(_text("petersen.edges")).graph


def petersen_predecessor() -> PlanarMultigraph:
    """Toroidal embedding of Petersen minus one edge (see the data file header)."""
    return parse_rsg(_text("petersen-predecessor.rsg"), require_sphere=False).graph


def petersen_predecessor_coloring() -> dict[int, KleinColor]:
    return parse_coloring(_text("petersen-predecessor.col")).edges


def face_by_edges(g: PlanarMultigraph, edges: frozenset[int]) -> Face:
    for f in g.faces:
        if frozenset(f.edges) == edges:
            return f
    raise KeyError(f"no face with edges {sorted(edges)}")


def prism_face_ids(g: PlanarMultigraph | None = None) -> dict[str, int]:
    """Face name (c0..c6) -> face id in ``g`` (default: the shipped prism)."""
    g = prism() if g is None else g
    return {name: face_by_edges(g, es).id for name, es in PRISM_FACES.items()}


def prism_primal() -> PlanarMultigraph:
    """The maximal planar graph whose dual is the prism (7 vertices)."""
    return dual_graph(prism())
