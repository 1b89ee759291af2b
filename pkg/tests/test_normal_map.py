import pytest

from fourcolor.embedding import build_embedding
from fourcolor.errors import HasBridge, NotCubic
from fourcolor.mapgen import random_normal_map
from fourcolor.normal_map import euler_polygon_check, validate_normal_map
from fourcolor.polyhedra import cube_map, dodecahedron_map, k4_map, theta_map


def test_cube_is_valid_normal_map():
    m = cube_map()
    assert m.face_count == 6


def test_k4_is_valid_normal_map():
    assert k4_map().face_count == 4


def test_non_cubic_rejected():
    # Two triangles sharing a vertex-free edge: degree-2 corners.
    emb = build_embedding({0: [0, 1], 1: [1, 2], 2: [2, 0]})
    with pytest.raises(NotCubic):
        validate_normal_map(emb)


def test_bridge_rejected():
    # Two digon-and-triangle gadgets joined by one bridge; all corners cubic.
    # Left: vertices 0,1,2 with a doubled 0-1 edge; right mirrors it;
    # edge 4 joins the two gadget tips.
    rotations = {
        0: [0, 1, 2],
        1: [1, 0, 3],
        2: [2, 3, 4],
        3: [4, 7, 8],
        4: [7, 5, 6],
        5: [6, 5, 8],
    }
    emb = build_embedding(rotations)
    assert emb.euler_characteristic() == 2
    with pytest.raises(HasBridge):
        validate_normal_map(emb)


def test_outer_face_defaults_to_largest():
    m = random_normal_map(12, 3)
    sizes = [m.face_size(f) for f in range(m.face_count)]
    assert m.face_size(m.outer_face) == max(sizes)


def test_outer_face_redesignation():
    m = cube_map()
    m2 = m.with_outer_face((m.outer_face + 1) % m.face_count)
    assert m2.faces == m.faces
    assert m2.outer_face != m.outer_face


def test_polygon_identity_platonics():
    for m, expected in (
        (k4_map(), {3: 4}),
        (cube_map(), {4: 6}),
        (dodecahedron_map(), {5: 12}),
        (theta_map(), {2: 3}),
    ):
        stats, ok = euler_polygon_check(m)
        assert ok
        assert stats.p == expected


def test_polygon_identity_random_maps():
    for seed in range(1, 200):
        m = random_normal_map(6 + seed % 30, seed)
        stats, ok = euler_polygon_check(m)
        assert ok
        assert stats.face_total == m.face_count


def test_handshake_and_cubic_random():
    for seed in (1, 7, 42):
        m = random_normal_map(25, seed)
        assert 2 * m.edge_count == 3 * m.vertex_count
        assert sum(m.face_size(f) for f in range(m.face_count)) == 2 * m.edge_count


def test_random_map_determinism():
    a = random_normal_map(30, 7)
    b = random_normal_map(30, 7)
    assert a.embedding.rot == b.embedding.rot


def test_random_map_k4_base():
    m = random_normal_map(4, 99)
    assert m.face_count == 4
    assert all(m.face_size(f) == 3 for f in range(4))


def test_faces_at_vertex():
    m = cube_map()
    for v in m.embedding.vertices:
        assert len(set(m.faces_at_vertex(v))) == 3
