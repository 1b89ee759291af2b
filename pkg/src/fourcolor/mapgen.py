"""Random normal-map generation."""

from __future__ import annotations

from .normal_map import NormalMap
from .triangulations import (
    dual_normal_map,
    eliminate_degree3,
    random_stacked_triangulation,
)


def random_normal_map(face_count: int, seed: int) -> NormalMap:
    """Random cubic bridgeless map with exactly ``face_count`` regions.

    Grows a random maximal planar graph by repeated vertex insertion into a
    uniformly chosen face and takes its dual; the regions correspond to the
    grown graph's vertices.  Degree-raising edge flips then remove degree-3
    vertices where possible, so the result is digon-free and (for
    face_count >= 6) normally triangle-free as well.  Deterministic per
    seed.
    """
    if face_count < 4:
        raise ValueError("face_count must be at least 4")
    rot = random_stacked_triangulation(face_count, seed)
    eliminate_degree3(rot)
    return dual_normal_map(rot)
