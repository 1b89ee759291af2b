"""Spiral ordering of the regions of a normal map.

The order starts at the outer region and repeatedly crosses into the first
unvisited region found by scanning the current region's boundary walk from
just past the border it was entered through, in the chosen direction.  When
no unvisited neighbor remains, a new chain opens at an unvisited neighbor of
the most recently labeled region that still has one, preferring candidates
closest (dual BFS distance) to the face where the previous chain stopped.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .embedding import dart_edge, twin
from .normal_map import NormalMap


@dataclass
class SpiralOrder:
    order: List[int]
    chains: List[List[int]]
    direction: str  # "cw" | "ccw"

    def position(self, face: int) -> int:
        return self.order.index(face)

    @property
    def positions(self) -> Dict[int, int]:
        return {f: i for i, f in enumerate(self.order)}


def _bfs_distances(m: NormalMap, source: int) -> List[int]:
    dist = [-1] * m.face_count
    dist[source] = 0
    q = deque([source])
    while q:
        f = q.popleft()
        for g in m.face_neighbors(f):
            if dist[g] < 0:
                dist[g] = dist[f] + 1
                q.append(g)
    return dist


def spiral_order(m: NormalMap, direction: str = "cw") -> SpiralOrder:
    if direction not in ("cw", "ccw"):
        raise ValueError("direction must be 'cw' or 'ccw'")
    step = 1 if direction == "cw" else -1
    visited = {m.outer_face}
    order = [m.outer_face]
    chains = [[m.outer_face]]
    current = m.outer_face
    entry_pos: Optional[int] = None

    while len(visited) < m.face_count:
        walk = m.faces[current]
        k = len(walk)
        start = 0 if entry_pos is None else (entry_pos + step) % k
        crossed = None
        for t in range(k):
            p = (start + step * t) % k
            other = m.face_of_dart(twin(walk[p]))
            if other not in visited:
                crossed = (other, twin(walk[p]))
                break
        if crossed is not None:
            nxt, entry_dart = crossed
            visited.add(nxt)
            order.append(nxt)
            chains[-1].append(nxt)
            current = nxt
            entry_pos = m.faces[nxt].index(entry_dart)
            continue
        # Chain is stuck: open a new one.
        anchor = None
        for f in reversed(order):
            cands = [g for g in m.face_neighbors(f) if g not in visited]
            if cands:
                anchor = f
                break
        if anchor is None:  # disconnected dual cannot happen on a NormalMap
            break
        cands = [g for g in m.face_neighbors(anchor) if g not in visited]
        dist = _bfs_distances(m, order[-1])
        start_face = min(cands, key=lambda g: (dist[g], g))
        visited.add(start_face)
        order.append(start_face)
        chains.append([start_face])
        current = start_face
        border = min(m.border_edges(start_face, anchor))
        entry_dart = (
            2 * border
            if m.face_of_dart(2 * border) == start_face
            else 2 * border + 1
        )
        entry_pos = m.faces[start_face].index(entry_dart)

    return SpiralOrder(order=order, chains=chains, direction=direction)
