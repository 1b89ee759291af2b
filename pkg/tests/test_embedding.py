import itertools

import pytest

from fourcolor.embedding import PlanarEmbedding, build_embedding, twin, dart_edge
from fourcolor.errors import EulerViolation, InconsistentRotation
from fourcolor.polyhedra import cube_map, dodecahedron_map, k4_map


def test_k4_euler():
    m = k4_map()
    emb = m.embedding
    assert emb.vertex_count == 4
    assert emb.edge_count == 6
    assert emb.face_count == 4
    assert emb.euler_characteristic() == 2


def test_cube_counts():
    m = cube_map()
    assert (m.vertex_count, m.edge_count, m.face_count) == (8, 12, 6)


def test_face_sizes():
    assert sorted(len(f) for f in k4_map().faces) == [3, 3, 3, 3]
    assert sorted(len(f) for f in cube_map().faces) == [4] * 6
    assert sorted(len(f) for f in dodecahedron_map().faces) == [5] * 12


def test_each_dart_in_one_face():
    m = dodecahedron_map()
    seen = set()
    for face in m.faces:
        for d in face:
            assert d not in seen
            seen.add(d)
    assert len(seen) == 2 * m.edge_count


def test_dangling_edge_end_rejected():
    with pytest.raises(InconsistentRotation):
        build_embedding({0: [0, 1], 1: [0]})
    with pytest.raises(InconsistentRotation):
        build_embedding({0: [0, 0, 1], 1: [0, 1]})


def test_k5_has_no_planar_rotation():
    """Exhaustive oracle: every rotation system of K5 violates Euler."""
    edges = list(itertools.combinations(range(5), 2))
    eid = {e: i for i, e in enumerate(edges)}
    incident = {
        v: [eid[e] for e in edges if v in e] for v in range(5)
    }
    base = {v: incident[v] for v in range(5)}
    # Cyclic rotations: fix the first entry, permute the rest (3! per
    # vertex); reflections are distinct rotation systems and included.
    perms = {
        v: [
            [base[v][0]] + list(p)
            for p in itertools.permutations(base[v][1:])
        ]
        for v in range(5)
    }
    count = 0
    for choice in itertools.product(*(perms[v] for v in range(5))):
        rot = {v: choice[v] for v in range(5)}
        emb = PlanarEmbedding(rot)
        assert emb.euler_characteristic() != 2
        count += 1
    assert count == 6**5


def test_twin_is_involution():
    m = cube_map()
    for d in m.embedding.darts():
        assert twin(twin(d)) == d
        assert dart_edge(twin(d)) == dart_edge(d)


def test_neighbors_in_rotation_order():
    m = cube_map()
    emb = m.embedding
    for v in emb.vertices:
        assert len(emb.neighbors(v)) == 3
