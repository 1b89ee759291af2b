from fourcolor.contraction import (
    contract_small_faces,
    expand_small_faces,
    replay_log,
)
from fourcolor.coloring import is_proper
from fourcolor.embedding import build_embedding
from fourcolor.mapgen import random_normal_map
from fourcolor.normal_map import validate_normal_map
from fourcolor.oracle import backtrack_four_color, verify_proper
from fourcolor.polyhedra import cube_map, k4_map
from fourcolor.triangulations import (
    dual_normal_map,
    random_stacked_triangulation,
)


def test_cube_unchanged():
    res = contract_small_faces(cube_map())
    assert len(res.log) == 0
    assert not res.degenerate
    assert res.map.face_count == 6


def test_k4_flagged_degenerate():
    res = contract_small_faces(k4_map())
    assert res.degenerate
    assert res.map.face_count == 4


def _with_digon_on_edge(m, edge):
    """Blow a map edge up into a path with a parallel middle segment."""
    base = {v: list(es) for v, es in m.embedding.rotations_as_edges().items()}
    u, v = m.embedding.endpoints(edge)
    a, b = max(m.embedding.vertices) + 1, max(m.embedding.vertices) + 2
    s1, s2, s3, s4 = (max(m.embedding.edges) + 1 + i for i in range(4))
    base[u][base[u].index(edge)] = s1
    base[v][base[v].index(edge)] = s3
    for ra in ([s1, s2, s4], [s1, s4, s2]):
        for rb in ([s3, s2, s4], [s3, s4, s2]):
            rot = {w: list(es) for w, es in base.items()}
            rot[a] = ra
            rot[b] = rb
            try:
                return validate_normal_map(build_embedding(rot))
            except Exception:
                continue
    raise AssertionError("digon insertion failed")


def test_digon_between_quadrilaterals_roundtrip():
    """A digon spliced into a cube edge; contraction must undo exactly."""
    m2 = _with_digon_on_edge(cube_map(), 0)
    assert 2 in [m2.face_size(f) for f in range(m2.face_count)]
    res = contract_small_faces(m2)
    assert not res.degenerate
    assert res.map.face_count == m2.face_count - 1
    assert replay_log(res.map, res.log).embedding.rot == m2.embedding.rot
    inner = backtrack_four_color(res.map.dual_adjacency())
    colors = expand_small_faces(inner, res.log)
    assert verify_proper(m2.dual_adjacency(), colors)


def test_stacked_duals_fully_collapse():
    """Duals of stacked triangulations undo insertion by insertion."""
    rot = random_stacked_triangulation(12, 5)
    m = dual_normal_map(rot)
    res = contract_small_faces(m)
    assert res.degenerate
    assert res.map.face_count == 4
    assert replay_log(res.map, res.log).embedding.rot == m.embedding.rot


def test_expand_empty_log_identity():
    m = cube_map()
    res = contract_small_faces(m)
    colors = [1, 2, 2, 3, 3, 1]
    assert expand_small_faces(colors, res.log) == colors


def test_contract_expand_random_roundtrip():
    for seed in range(1, 60):
        m = random_normal_map(10 + seed % 25, seed)
        res = contract_small_faces(m)
        assert replay_log(res.map, res.log).embedding.rot == m.embedding.rot
        if res.degenerate:
            inner = list(range(1, res.map.face_count + 1))
        else:
            inner = backtrack_four_color(res.map.dual_adjacency())
        colors = expand_small_faces(inner, res.log)
        assert verify_proper(m.dual_adjacency(), colors), seed


def test_contracted_maps_have_no_small_faces():
    for seed in range(1, 40):
        m = random_normal_map(14 + seed % 20, seed)
        res = contract_small_faces(m)
        if not res.degenerate:
            assert all(
                res.map.face_size(f) >= 4 for f in range(res.map.face_count)
            )


def test_reinserted_face_color_is_spare():
    for seed in (3, 9, 27):
        m = random_normal_map(18, seed)
        res = contract_small_faces(m)
        if res.degenerate or not res.log.steps:
            continue
        inner = backtrack_four_color(res.map.dual_adjacency())
        colors = expand_small_faces(inner, res.log)
        assert is_proper(m, colors)
        assert all(c != 0 for c in colors)
