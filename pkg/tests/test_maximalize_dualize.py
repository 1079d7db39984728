import numpy as np
import pytest

from kleincolor import fixtures
from kleincolor.dualize import (
    check_cubic,
    cycle_matrix,
    dualize,
    format_matrix,
    incidence_matrix,
)
from kleincolor.graph import GraphError, PlanarMultigraph, euler_check, remove_edge
from kleincolor.maximalize import is_simple, triangulate, untriangulate
from kleincolor.planar_random import delaunay_graph, random_planar_graph


def cycle(n):
    ends = {i: (i, (i + 1) % n) for i in range(n)}
    rot = {i: [i, (i - 1) % n] for i in range(n)}
    return PlanarMultigraph.from_rotations(ends, rot)


def test_k4_unchanged(k4):
    h, rec = triangulate(k4)
    assert h == k4 and rec.added_edges == ()


def test_c4_gets_one_diagonal():
    h, rec = triangulate(cycle(4))
    assert h.n_edges == 6 and len(rec.edges) == 2
    # both 4-gon faces get one chord
    assert {f.id for _, f in rec.added_edges} == {0, 1}


def test_pentagon_face_gains_two_chords():
    h, rec = triangulate(cycle(5))
    assert h.n_edges == 9 and len(rec.edges) == 4


def test_prism_triangulation(prism):
    h, rec = triangulate(prism)
    assert h.n_edges == 3 * 10 - 6
    # each k-gon face needs k - 3 chords
    assert len(rec.edges) == sum(len(f) - 3 for f in prism.faces)
    assert untriangulate(h, rec) == prism


def test_rejects_multigraph_and_small(theta):
    with pytest.raises(GraphError):
        triangulate(theta)
    ends = {0: (0, 1), 1: (1, 0)}
    with pytest.raises(GraphError):
        triangulate(PlanarMultigraph.from_rotations(ends, {0: [0, 1], 1: [1, 0]}))


def test_rejects_bridge():
    ends = {0: (0, 1), 1: (1, 2), 2: (2, 0), 3: (2, 3), 4: (3, 4), 5: (4, 5), 6: (5, 3)}
    rot = {0: [0, 2], 1: [1, 0], 2: [2, 1, 3], 3: [3, 6, 4], 4: [4, 5], 5: [5, 6]}
    with pytest.raises(GraphError):
        triangulate(PlanarMultigraph.from_rotations(ends, rot))


@pytest.mark.parametrize("seed", range(25))
def test_random_triangulation(seed):
    g = random_planar_graph(5 + seed, seed, deletions=0.5)
    h, rec = triangulate(g)
    assert h.n_edges == 3 * h.n_vertices - 6
    assert is_simple(h) and euler_check(h).ok
    assert all(len(f) == 3 for f in h.faces)
    assert untriangulate(h, rec) == g


def test_chord_endpoints_share_an_input_face():
    g = random_planar_graph(30, 7, deletions=0.6)
    h, rec = triangulate(g)
    input_faces = [{g.origin[d] for d in f.boundary} for f in g.faces]
    for e in rec.edges:
        a, b = h.ends(e)
        assert any(a in f and b in f for f in input_faces)


def test_dual_k4(k4):
    h, corr = dualize(k4)
    assert (h.n_vertices, h.n_edges) == (4, 6) and check_cubic(h)
    assert corr.edge_to_edge == {e: e for e in k4.edges}


def test_dual_bipyramid():
    g = fixtures.bipyramid()
    assert {frozenset(f.edges) for f in g.faces} == set(fixtures.BIPYRAMID_FACES.values())
    h, corr = dualize(g)
    assert (h.n_vertices, h.n_edges) == (6, 9)
    assert check_cubic(h) and euler_check(h).ok


def test_dual_of_triangle_is_theta():
    h, _ = dualize(fixtures.triangle())
    assert (h.n_vertices, h.n_edges) == (2, 3)


def test_double_triangle():
    g = delaunay_graph(np.array([[0, 0], [1, 0], [0.5, 1], [0.5, -1]]))
    assert (g.n_edges, len(g.faces)) == (5, 3)
    m, _ = triangulate(g)
    h, _ = dualize(m)
    assert 2 * h.n_edges == 3 * h.n_vertices
    assert h.n_vertices == len(m.faces)


def test_dualize_rejects_non_triangular(prism):
    with pytest.raises(GraphError):
        dualize(prism)


def test_edge_correspondence_joins_adjacent_faces():
    g = random_planar_graph(20, 3)
    m, _ = triangulate(g)
    h, corr = dualize(m)
    for e in m.edges:
        f1, f2 = m.face_of_dart[2 * e], m.face_of_dart[2 * e + 1]
        assert set(h.ends(corr.edge_to_edge[e])) == {corr.face_to_vertex[f1], corr.face_to_vertex[f2]}
    # each primal vertex maps to a dual face whose edges are the vertex's edges
    for v in m.vertices:
        face = h.faces[corr.vertex_to_face[v]]
        assert set(face.edges) == set(m.incident_edges(v))


def test_dual_dual_counts():
    g = random_planar_graph(15, 11)
    m, _ = triangulate(g)
    h, _ = dualize(m)
    from kleincolor.graph import dual_graph

    back = dual_graph(h)
    assert (back.n_vertices, back.n_edges, len(back.faces)) == (m.n_vertices, m.n_edges, len(m.faces))
    assert back.degree_sequence() == m.degree_sequence()


def test_check_cubic(prism, theta, k4):
    assert check_cubic(prism) and check_cubic(theta)
    assert not check_cubic(remove_edge(k4, 0))


def test_matrices_bipyramid():
    g = fixtures.bipyramid()
    h, _ = dualize(g)
    cm = cycle_matrix(g)
    im = incidence_matrix(h)
    assert cm.shape == (6, 9) and (cm.sum(axis=0) == 2).all() and (cm.sum(axis=1) == 3).all()
    assert sorted(map(tuple, cm.tolist())) == sorted(map(tuple, im.tolist()))
    text = format_matrix(cm, [f"c{i}" for i in range(6)], list("abcdefghi"))
    assert text.splitlines()[0].split() == list("abcdefghi")
