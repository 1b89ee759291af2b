"""Reference maps built from convex polyhedra coordinates."""

from __future__ import annotations

import math
from typing import Dict, List, Sequence, Tuple

from .embedding import PlanarEmbedding, build_embedding
from .errors import FourColorError
from .normal_map import NormalMap, validate_normal_map
from .triangulations import Rotations, dual_normal_map, k4_rotations

Vec = Tuple[float, float, float]


def _sub(a: Vec, b: Vec) -> Vec:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _dot(a: Vec, b: Vec) -> float:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross(a: Vec, b: Vec) -> Vec:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _norm(a: Vec) -> float:
    return math.sqrt(_dot(a, a))


def rotations_from_coordinates(
    coords: Sequence[Vec], edges: Sequence[Tuple[int, int]]
) -> Rotations:
    """Neighbor rotations of a convex polyhedron centered at the origin.

    Neighbors are sorted by angle in the tangent plane at each vertex
    (outward normal = position vector); the global orientation is fixed by
    an Euler check.
    """
    adj: Dict[int, List[int]] = {i: [] for i in range(len(coords))}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for flip in (False, True):
        rot: Rotations = {}
        for v, nbrs in adj.items():
            p = coords[v]
            n = p  # outward normal
            ref = _sub(coords[nbrs[0]], p)
            ref = _sub(ref, _scale(n, _dot(ref, n) / _dot(n, n)))
            binorm = _cross(n, ref)

            def angle(w: int) -> float:
                d = _sub(coords[w], p)
                d = _sub(d, _scale(n, _dot(d, n) / _dot(n, n)))
                return math.atan2(_dot(d, binorm), _dot(d, ref) * _norm(binorm) / max(_norm(ref), 1e-12))

            rot[v] = sorted(nbrs, key=lambda w: angle(w), reverse=flip)
        try:
            from .triangulations import embedding_of

            if embedding_of(rot).euler_characteristic() == 2:
                return rot
        except FourColorError:
            continue
    raise FourColorError("no consistent orientation found")


def _scale(a: Vec, s: float) -> Vec:
    return (a[0] * s, a[1] * s, a[2] * s)


def octahedron_rotations() -> Rotations:
    coords = [
        (1, 0, 0),
        (-1, 0, 0),
        (0, 1, 0),
        (0, -1, 0),
        (0, 0, 1),
        (0, 0, -1),
    ]
    edges = [
        (u, v)
        for u in range(6)
        for v in range(u + 1, 6)
        if _dot(coords[u], coords[v]) == 0
    ]
    return rotations_from_coordinates(coords, edges)


def icosahedron_rotations() -> Rotations:
    phi = (1 + math.sqrt(5)) / 2
    coords: List[Vec] = []
    for a in (-1.0, 1.0):
        for b in (-phi, phi):
            coords.append((0.0, a, b))
            coords.append((a, b, 0.0))
            coords.append((b, 0.0, a))
    edge_len = 2.0
    edges = []
    for u in range(12):
        for v in range(u + 1, 12):
            if abs(_norm(_sub(coords[u], coords[v])) - edge_len) < 1e-9:
                edges.append((u, v))
    return rotations_from_coordinates(coords, edges)


def k4_map() -> NormalMap:
    """The tetrahedron map: smallest cubic normal map, four triangles."""
    return dual_normal_map(k4_rotations())


def cube_map() -> NormalMap:
    """Six quadrilateral regions (dual of the octahedron)."""
    return dual_normal_map(octahedron_rotations())


def dodecahedron_map() -> NormalMap:
    """Twelve pentagonal regions (dual of the icosahedron)."""
    return dual_normal_map(icosahedron_rotations())


def theta_map() -> NormalMap:
    """Two vertices joined by three parallel edges: three digon regions."""
    emb = build_embedding({0: [0, 1, 2], 1: [2, 1, 0]})
    return validate_normal_map(emb)
