"""White-ring analysis: cycles of uncolored regions and their parities.

Two independent parity computations exist for the ring around a connected
colored sub-map: the direct one walks the sub-map's boundary curve and
counts region transitions, while the label-based one sums the size-parities
of every region inside the curve.  For properly 2-colored sub-maps the
transitions around the curve alternate colors, which forces the two counts
to agree mod 2; the test suite exercises that equivalence at scale.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .coloring import WHITE
from .errors import NoSurroundingRing
from .normal_map import NormalMap


@dataclass
class WhiteRing:
    faces: Tuple[int, ...]  # cyclic sequence, consecutive faces adjacent
    parity: int  # len(faces) mod 2
    enclosed: Tuple[int, ...]  # faces inside (colored sub-map side)

    def __len__(self) -> int:
        return len(self.faces)


def white_subgraph(m: NormalMap, colors: Sequence[int]) -> Dict[int, List[int]]:
    return {
        f: [g for g in m.face_neighbors(f) if colors[g] == WHITE]
        for f in range(m.face_count)
        if colors[f] == WHITE
    }


def white_components(m: NormalMap, colors: Sequence[int]) -> List[List[int]]:
    graph = white_subgraph(m, colors)
    seen: Set[int] = set()
    comps = []
    for f in sorted(graph):
        if f in seen:
            continue
        comp = [f]
        seen.add(f)
        stack = [f]
        while stack:
            u = stack.pop()
            for w in graph[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def odd_white_cycle(m: NormalMap, colors: Sequence[int]) -> Optional[List[int]]:
    """Some odd cycle of the white adjacency subgraph, or None if bipartite."""
    graph = white_subgraph(m, colors)
    side: Dict[int, int] = {}
    parent: Dict[int, Optional[int]] = {}
    for root in sorted(graph):
        if root in side:
            continue
        side[root] = 0
        parent[root] = None
        q = deque([root])
        while q:
            u = q.popleft()
            for w in graph[u]:
                if w not in side:
                    side[w] = side[u] ^ 1
                    parent[w] = u
                    q.append(w)
                elif side[w] == side[u]:
                    return _extract_cycle(parent, u, w)
    return None


def _extract_cycle(parent, u, w):
    anc_u = [u]
    x = u
    while parent[x] is not None:
        x = parent[x]
        anc_u.append(x)
    anc_w = [w]
    x = w
    while parent[x] is not None:
        x = parent[x]
        anc_w.append(x)
    set_u = set(anc_u)
    meet = next(x for x in anc_w if x in set_u)
    cyc = anc_u[: anc_u.index(meet) + 1]
    tail = anc_w[: anc_w.index(meet)]
    return cyc + tail[::-1]


def _chordless_cycles(graph: Dict[int, List[int]]) -> List[List[int]]:
    """All chordless cycles (length >= 3), each listed once.

    Cycles are rooted at their minimum vertex; a growing path may only add
    vertices adjacent to its head and to nothing earlier, and a vertex
    adjacent to the root must close the cycle immediately (anything longer
    would carry that edge as a chord).
    """
    adj = {v: set(ns) for v, ns in graph.items()}
    cycles: List[List[int]] = []

    def extend(path: List[int], members: Set[int]):
        s = path[0]
        last = path[-1]
        for w in sorted(adj[last]):
            if w <= s or w in members:
                continue
            if any(x in adj[w] for x in path[1:-1]):
                continue
            if s in adj[w]:
                if len(path) >= 2 and path[1] < w:
                    cycles.append(path + [w])
                continue
            extend(path + [w], members | {w})

    for s in sorted(adj):
        extend([s], {s})
    return cycles


def _complement_components(
    m: NormalMap, hole: Set[int]
) -> List[List[int]]:
    seen: Set[int] = set(hole)
    comps = []
    for f in range(m.face_count):
        if f in seen:
            continue
        comp = [f]
        seen.add(f)
        stack = [f]
        while stack:
            u = stack.pop()
            for w in m.face_neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def white_rings(m: NormalMap, colors: Sequence[int]) -> List[WhiteRing]:
    """Chordless white cycles that enclose something.

    With colored regions present, a cycle qualifies when some complement
    component contains a colored region; on an all-white map any chordless
    cycle with a nonempty complement qualifies (sphere model, no special
    role for the outer region).
    """
    graph = white_subgraph(m, colors)
    any_colored = any(c != WHITE for c in colors)
    rings = []
    for cyc in _chordless_cycles(graph):
        comps = _complement_components(m, set(cyc))
        if any_colored:
            colored = [
                comp for comp in comps if any(colors[f] != WHITE for f in comp)
            ]
            if m.outer_face not in cyc:
                colored = [c for c in colored if m.outer_face not in c]
            if not colored:
                continue
            enclosed = tuple(sorted(f for comp in colored for f in comp))
        else:
            if not comps:
                continue
            enclosed = tuple(min(comps, key=len))
        rings.append(
            WhiteRing(faces=tuple(cyc), parity=len(cyc) % 2, enclosed=enclosed)
        )
    rings.sort(key=lambda r: (len(r.faces), r.faces))
    return rings


# -- colored sub-maps and the parity-label oracle ---------------------------


def colored_submaps(m: NormalMap, colors: Sequence[int]) -> List[List[int]]:
    """Maximal connected sub-maps of colored regions (dual components)."""
    seen: Set[int] = set()
    comps = []
    for f in range(m.face_count):
        if colors[f] == WHITE or f in seen:
            continue
        comp = [f]
        seen.add(f)
        stack = [f]
        while stack:
            u = stack.pop()
            for w in m.face_neighbors(u):
                if colors[w] != WHITE and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def surrounding_walk(m: NormalMap, submap: Sequence[int]) -> List[int]:
    """Cyclic sequence of outside regions along the sub-map's boundary.

    The "outside" is the complement component holding the outer region (or
    the largest component when the sub-map contains the outer region).
    Raises NoSurroundingRing when the sub-map covers the whole sphere or
    its boundary is not a single closed curve.
    """
    inside = set(submap)
    comps = _complement_components(m, inside)
    if not comps:
        raise NoSurroundingRing("sub-map covers every region")
    outside = None
    for comp in comps:
        if m.outer_face in comp:
            outside = set(comp)
            break
    if outside is None:
        outside = set(max(comps, key=len))
    emb = m.embedding
    boundary = []
    for e in emb.edges:
        a = m.face_of_dart(2 * e)
        b = m.face_of_dart(2 * e + 1)
        if (a in inside and b in outside) or (b in inside and a in outside):
            boundary.append(e)
    if not boundary:
        raise NoSurroundingRing("sub-map has no boundary with the outside")
    # Walk the curve: at each of its vertices exactly two boundary edges meet.
    at_vertex: Dict[int, List[int]] = {}
    for e in boundary:
        for v in emb.endpoints(e):
            at_vertex.setdefault(v, []).append(e)
    if any(len(es) != 2 for es in at_vertex.values()):
        raise NoSurroundingRing("boundary curve is pinched")
    start = min(boundary)
    walk_edges = [start]
    v = emb.endpoints(start)[0]
    while True:
        e = walk_edges[-1]
        nxt = next(x for x in at_vertex[v] if x != e)
        if nxt == start:
            break
        walk_edges.append(nxt)
        u, w = emb.endpoints(nxt)
        v = w if u == v else u
    if len(walk_edges) != len(boundary):
        raise NoSurroundingRing("boundary has several curves")
    outside_faces = []
    for e in walk_edges:
        a = m.face_of_dart(2 * e)
        outside_faces.append(a if a in outside else m.face_of_dart(2 * e + 1))
    walk = []
    k = len(outside_faces)
    for i, f in enumerate(outside_faces):
        if f != outside_faces[(i - 1) % k]:
            walk.append(f)
    if not walk:  # single outside region wrapping the whole boundary
        walk = [outside_faces[0]]
    return walk


def ring_parity_by_labels(
    m: NormalMap, colors: Sequence[int], submap: Sequence[int]
) -> int:
    """Parity of the surrounding white ring from size labels alone.

    Sums f(r) = |r| mod 2 over the sub-map's regions and everything they
    enclose (trapped regions in the sub-map's holes included).
    """
    inside = set(submap)
    comps = _complement_components(m, inside)
    if not comps:
        raise NoSurroundingRing("sub-map covers every region")
    outside = None
    for comp in comps:
        if m.outer_face in comp:
            outside = set(comp)
            break
    if outside is None:
        outside = set(max(comps, key=len))
    total = 0
    for f in range(m.face_count):
        if f not in outside:
            total += m.face_size(f)
    return total % 2


def surrounding_ring_parity(m: NormalMap, submap: Sequence[int]) -> int:
    """Direct parity: length of the surrounding region walk mod 2."""
    return len(surrounding_walk(m, submap)) % 2
