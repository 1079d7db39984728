import pytest
from hypothesis import given, settings, strategies as st

from kleincolor import fixtures
from kleincolor.builder import generate_random
from kleincolor.graph import (
    GraphError,
    NotSphericalError,
    PlanarMultigraph,
    add_edge_in_face,
    bridges,
    dual_graph,
    euler_check,
    faces_of,
    is_bridgeless,
    relabel,
    smooth_vertex,
    subdivide_edge,
    twin,
)


def test_theta_faces(theta):
    fs = faces_of(theta)
    assert len(fs) == 3
    assert all(len(f) == 2 for f in fs)


def test_triangle_faces():
    g = fixtures.triangle()
    fs = g.faces
    assert len(fs) == 2
    assert all(set(f.edges) == set(g.edges) for f in fs)


def test_prism_faces_match_listing(prism):
    got = {frozenset(f.edges) for f in prism.faces}
    assert got == set(fixtures.PRISM_FACES.values())


def test_faces_partition_darts(prism):
    darts = [d for f in prism.faces for d in f.boundary]
    assert sorted(darts) == sorted(prism.origin)


def test_faces_ordered_by_smallest_dart(prism):
    firsts = [min(f.boundary) for f in prism.faces]
    assert firsts == sorted(firsts)


def test_euler_reports():
    assert tuple(vars(euler_check(fixtures.prism())).values())[:3] == (10, 15, 7)
    r = euler_check(fixtures.k4())
    assert (r.vertices, r.edges, r.faces, r.ok) == (4, 6, 4, True)


def test_petersen_id_order_rotation_is_not_spherical():
    r = euler_check(fixtures.petersen())
    assert not r.ok and r.defect > 0


def test_predecessor_is_toroidal():
    r = euler_check(fixtures.petersen_predecessor())
    assert r.characteristic == 0


def test_non_spherical_rejected():
    ends = {e: uv for e, uv in enumerate([(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])}
    # the tetrahedron with one rotation reversed is no longer a sphere
    rot = {0: [0, 2, 3], 1: [0, 1, 4], 2: [1, 2, 5], 3: [3, 4, 5]}
    with pytest.raises(NotSphericalError) as exc:
        PlanarMultigraph.from_rotations(ends, rot)
    assert exc.value.report.defect != 0


def test_loop_rejected():
    with pytest.raises(GraphError):
        PlanarMultigraph.from_rotations({0: (0, 0)}, {0: [0, 0]})


def test_disconnected_rejected():
    ends = {0: (0, 1), 1: (2, 3)}
    with pytest.raises(GraphError):
        PlanarMultigraph.from_rotations(ends, {0: [0], 1: [0], 2: [1], 3: [1]}, require_sphere=False)


def test_bridges():
    assert is_bridgeless(fixtures.theta())
    assert is_bridgeless(fixtures.prism())
    ends = {0: (0, 1), 1: (1, 2), 2: (2, 0), 3: (3, 4), 4: (4, 5), 5: (5, 3), 6: (0, 3)}
    rot = {0: [0, 2, 6], 1: [1, 0], 2: [2, 1], 3: [3, 6, 5], 4: [4, 3], 5: [5, 4]}
    g = PlanarMultigraph.from_rotations(ends, rot)
    assert bridges(g) == [6]
    assert not is_bridgeless(g)


def test_subdivide_theta(theta):
    g2, w, (e, f) = subdivide_edge(theta, 0)
    assert (g2.n_vertices, g2.n_edges, euler_check(g2).ok) == (3, 4, True)
    assert g2.degree(w) == 2 and set(g2.incident_edges(w)) == {e, f}


def test_subdivide_prism_u11(prism):
    g2, _, _ = subdivide_edge(prism, 11)
    r = euler_check(g2)
    assert (r.vertices, r.edges, r.faces) == (11, 16, 7)


def test_subdivide_unknown_edge(theta):
    with pytest.raises(GraphError):
        subdivide_edge(theta, 99)


def test_smooth_errors(theta, prism):
    g2, w, _ = subdivide_edge(theta, 0)
    with pytest.raises(GraphError):
        smooth_vertex(g2, 0)  # degree 3
    # a vertex on a 2-cycle: both edges join the same pair
    ends = {0: (0, 1), 1: (1, 0), 2: (0, 2), 3: (2, 0)}
    with pytest.raises(GraphError):
        g = PlanarMultigraph.from_rotations(ends, {0: [0, 1, 2, 3], 1: [1, 0], 2: [3, 2]})
        smooth_vertex(g, 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 12).map(lambda k: 2 * k), st.integers(0, 10**6), st.data())
def test_subdivide_smooth_inverse(n, seed, data):
    g, _ = generate_random(n, seed)
    e = data.draw(st.sampled_from(g.edges))
    g2, w, (a, b) = subdivide_edge(g, e)
    g3, kept = smooth_vertex(g2, w, keep=e)
    assert g3 == g
    g4, kept = smooth_vertex(g2, w)
    assert relabel(g4, edge_map={kept: e}) == g


def test_add_edge_in_face_quad_to_triangles():
    ends = {0: (0, 1), 1: (1, 2), 2: (2, 3), 3: (3, 0)}
    g = PlanarMultigraph.from_rotations(ends, {0: [0, 3], 1: [1, 0], 2: [2, 1], 3: [3, 2]})
    g2, e = add_edge_in_face(g, 0, 2, g.faces[0])
    assert sorted(len(f) for f in g2.faces) == [3, 3, 4]
    g3, _ = add_edge_in_face(g2, 1, 3, [f for f in g2.faces if len(f) == 4][0])
    assert g3.n_edges == 6 and len(g3.faces) == 4


def test_add_edge_parallel_policy(theta):
    with pytest.raises(GraphError):
        add_edge_in_face(theta, 0, 1, theta.faces[0])
    g2, _ = add_edge_in_face(theta, 0, 1, theta.faces[0], allow_parallel=True)
    assert g2.n_edges == 4 and len(g2.faces) == 4


def test_add_edge_vertex_not_on_face(prism):
    face = fixtures.face_by_edges(prism, fixtures.PRISM_FACES["c1"])
    far = next(v for v in prism.vertices if all(prism.origin[d] != v for d in face.boundary))
    with pytest.raises(GraphError):
        add_edge_in_face(prism, prism.origin[face.boundary[0]], far, face)


def test_prism_u2_u15_share_no_face(prism):
    assert not any({2, 15} <= set(f.edges) for f in prism.faces)


def test_prism_midpoints_u12_u15(prism):
    face = next(f for f in prism.faces if {12, 15} <= set(f.edges))
    g1, a, _ = subdivide_edge(prism, 12)
    g2, b, _ = subdivide_edge(g1, 15)
    face2 = next(f for f in g2.faces if {a, b} <= {g2.origin[d] for d in f.boundary})
    g3, _ = add_edge_in_face(g2, a, b, face2)
    r = euler_check(g3)
    assert face is not None
    assert (r.vertices, r.edges, r.faces) == (12, 18, 8)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 15).map(lambda k: 2 * k), st.integers(0, 10**6), st.data())
def test_add_edge_adds_one_face(n, seed, data):
    g, _ = generate_random(n, seed)
    face = data.draw(st.sampled_from([f for f in g.faces if len(f) >= 2]))
    i, j = data.draw(st.lists(st.integers(0, len(face) - 1), min_size=2, max_size=2, unique=True))
    v1, v2 = g.origin[face.boundary[i]], g.origin[face.boundary[j]]
    if v1 == v2:
        return
    g2, _ = add_edge_in_face(g, v1, v2, face, allow_parallel=True)
    assert g2.n_edges == g.n_edges + 1
    assert len(g2.faces) == len(g.faces) + 1


def test_twin_involution(prism):
    assert all(twin(twin(d)) == d and twin(d) != d for d in prism.origin)


def test_dual_of_k4_is_k4(k4):
    d = dual_graph(k4)
    assert (d.n_vertices, d.n_edges, len(d.faces)) == (4, 6, 4)


def test_value_semantics(prism):
    assert prism == fixtures.prism()
    assert hash(prism) == hash(fixtures.prism())
    assert prism != fixtures.k4()


def test_no_petersen_rotation_system_is_spherical():
    p = fixtures.petersen()
    lists = {v: list(p.incident_edges(v)) for v in p.vertices}
    ends = {e: p.ends(e) for e in p.edges}
    faces = set()
    for mask in range(1 << len(lists)):
        rot = {v: es if mask >> i & 1 else es[::-1] for i, (v, es) in enumerate(sorted(lists.items()))}
        g = PlanarMultigraph.from_rotations(ends, rot, require_sphere=False)
        r = euler_check(g)
        assert not r.ok
        faces.add(r.faces)
    assert max(faces) <= 6  # a sphere would need 7
