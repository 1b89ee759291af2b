"""Face-coloring primitives shared by the pipeline steps."""

from __future__ import annotations

from typing import Iterable, List, Set

from .normal_map import NormalMap

WHITE = 0
BROWN = 1
GREEN = 2
LIGHT_BLUE = 3
DARK_BLUE = 4

COLOR_NAMES = {
    WHITE: "white",
    BROWN: "brown",
    GREEN: "green",
    LIGHT_BLUE: "lightblue",
    DARK_BLUE: "darkblue",
}
COLOR_IDS = {name: cid for cid, name in COLOR_NAMES.items()}


def blank_coloring(m: NormalMap) -> List[int]:
    return [WHITE] * m.face_count


def is_proper(m: NormalMap, colors: List[int]) -> bool:
    """No two bordering regions share a non-white color."""
    for f in range(m.face_count):
        cf = colors[f]
        if cf == WHITE:
            continue
        for g in m.face_neighbors(f):
            if g > f and colors[g] == cf:
                return False
    return True


def is_full(colors: List[int]) -> bool:
    return all(c != WHITE for c in colors)


def compute_spots(m: NormalMap, colors: List[int]) -> Set[int]:
    """Vertices none of whose three incident regions carries a color."""
    spots = set()
    for v in m.embedding.vertices:
        if all(colors[f] == WHITE for f in m.faces_at_vertex(v)):
            spots.add(v)
    return spots


def spot_count_on_face(m: NormalMap, f: int, spots: Set[int]) -> int:
    return sum(1 for v in m.face_vertices(f) if v in spots)


def spot_graph_is_acyclic(m: NormalMap, colors: List[int]) -> bool:
    """Whether the map edges joining spot vertices form a forest."""
    spots = compute_spots(m, colors)
    parent = {v: v for v in spots}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    emb = m.embedding
    for e in emb.edges:
        u, v = emb.endpoints(e)
        if u in spots and v in spots:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[rv] = ru
    return True


def detect_islands(m: NormalMap, colors: List[int]) -> List[int]:
    """Colored regions all of whose neighbors are white."""
    return [
        f
        for f in range(m.face_count)
        if colors[f] != WHITE
        and all(colors[g] == WHITE for g in m.face_neighbors(f))
    ]


def colors_used(colors: Iterable[int]) -> int:
    return len({c for c in colors if c != WHITE})
