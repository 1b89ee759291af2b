"""Planar triangulation machinery: growth, splits, flips, duals, enumeration.

Triangulations are handled as neighbor-rotation dicts: vertex -> list of
neighbor vertices in clockwise order.  The orientation convention matches
:mod:`fourcolor.embedding`: for an oriented triangle walk (x, y, z), vertex
y's rotation lists z immediately after x.
"""

from __future__ import annotations

import random
from typing import Dict, Iterable, List, Tuple

from .embedding import PlanarEmbedding, build_embedding, dart_edge
from .errors import FourColorError
from .normal_map import NormalMap, validate_normal_map

Rotations = Dict[int, List[int]]


def k4_rotations() -> Rotations:
    return {0: [1, 2, 3], 1: [0, 3, 2], 2: [0, 1, 3], 3: [0, 2, 1]}


def embedding_of(rot: Rotations) -> PlanarEmbedding:
    return build_embedding(as_edge_rotations(rot))


def as_edge_rotations(rot: Rotations) -> Dict[int, List[int]]:
    pairs = sorted({(min(u, v), max(u, v)) for u, nbrs in rot.items() for v in nbrs})
    ids = {p: i for i, p in enumerate(pairs)}
    return {
        u: [ids[(min(u, v), max(u, v))] for v in nbrs] for u, nbrs in rot.items()
    }


def oriented_faces(rot: Rotations) -> List[Tuple[int, ...]]:
    """Face walks as vertex tuples, via dart orbits of the rotation system."""
    pos = {u: {v: i for i, v in enumerate(nbrs)} for u, nbrs in rot.items()}
    nxt = {}
    for u, nbrs in rot.items():
        for v in nbrs:
            j = pos[v][u]
            w = rot[v][(j + 1) % len(rot[v])]
            nxt[(u, v)] = (v, w)
    faces = []
    seen = set()
    for d in sorted(nxt):
        if d in seen:
            continue
        walk = []
        cur = d
        while cur not in seen:
            seen.add(cur)
            walk.append(cur[0])
            cur = nxt[cur]
        faces.append(tuple(walk))
    return faces


def is_triangulation(rot: Rotations) -> bool:
    n = len(rot)
    e = sum(len(nbrs) for nbrs in rot.values()) // 2
    if n >= 3 and e != 3 * n - 6:
        return False
    try:
        emb = embedding_of(rot)
    except FourColorError:
        return False
    return all(len(f) == 3 for f in emb.trace_faces())


def insert_vertex_in_face(rot: Rotations, face: Tuple[int, int, int], new_id: int) -> None:
    """Stacked insertion: join ``new_id`` to the corners of oriented ``face``."""
    x, y, z = face
    rot[new_id] = [x, z, y]
    _insert_between(rot, x, z, y, new_id)
    _insert_between(rot, y, x, z, new_id)
    _insert_between(rot, z, y, x, new_id)


def _insert_between(rot: Rotations, at: int, after: int, before: int, w: int) -> None:
    nbrs = rot[at]
    k = len(nbrs)
    for i, v in enumerate(nbrs):
        if v == after and nbrs[(i + 1) % k] == before:
            nbrs.insert(i + 1, w)
            return
    raise FourColorError(f"no corner ({after},{before}) at vertex {at}")


def random_stacked_triangulation(n: int, seed: int) -> Rotations:
    """Grow from K4 by inserting degree-3 vertices into uniform random faces."""
    if n < 4:
        raise ValueError("need n >= 4")
    rng = random.Random(seed)
    rot = k4_rotations()
    faces = oriented_faces(rot)
    for new_id in range(4, n):
        i = rng.randrange(len(faces))
        x, y, z = faces.pop(i)
        insert_vertex_in_face(rot, (x, y, z), new_id)
        faces.extend([(x, y, new_id), (y, z, new_id), (z, x, new_id)])
    return rot


def vertex_split(rot: Rotations, v: int, i: int, j: int, new_id: int) -> Rotations:
    """Split ``v`` along rotation positions i < j; ``v`` keeps arc R[i..j].

    The complementary arc goes to ``new_id``; both split vertices stay
    adjacent to the arc endpoints, whose corners host the new edge.
    """
    out = {u: list(nbrs) for u, nbrs in rot.items()}
    R = out[v]
    d = len(R)
    if not (0 <= i < j < d):
        raise ValueError("need 0 <= i < j < len(rotation)")
    a, b = R[i], R[j]
    arc1 = R[i : j + 1]
    arc2 = R[j:] + R[: i + 1]
    out[v] = arc1 + [new_id]
    out[new_id] = arc2 + [v]
    for x in arc2[1:-1]:
        out[x][out[x].index(v)] = new_id
    pa = out[a].index(v)
    out[a][pa : pa + 1] = [v, new_id]
    pb = out[b].index(v)
    out[b][pb : pb + 1] = [new_id, v]
    return out


def legal_splits(rot: Rotations, v: int) -> Iterable[Tuple[int, int]]:
    d = len(rot[v])
    for i in range(d):
        for j in range(i + 1, d):
            yield (i, j)


def flip_edge(rot: Rotations, u: int, v: int) -> bool:
    """Replace diagonal (u, v) by the opposite diagonal; False if illegal."""
    if v not in rot[u]:
        return False
    if len(rot[u]) <= 3 or len(rot[v]) <= 3:
        return False
    pu = rot[u].index(v)
    du = len(rot[u])
    p = rot[u][(pu - 1) % du]
    q = rot[u][(pu + 1) % du]
    pv = rot[v].index(u)
    dv = len(rot[v])
    if {rot[v][(pv - 1) % dv], rot[v][(pv + 1) % dv]} != {p, q}:
        return False
    if q in rot[p]:
        return False
    rot[u].remove(v)
    rot[v].remove(u)
    _insert_at_corner(rot, p, v, u, q)
    _insert_at_corner(rot, q, u, v, p)
    return True


def _insert_at_corner(rot: Rotations, at: int, first: int, second: int, w: int) -> None:
    nbrs = rot[at]
    k = len(nbrs)
    for i, x in enumerate(nbrs):
        if x == first and nbrs[(i + 1) % k] == second:
            nbrs.insert(i + 1, w)
            return
    raise FourColorError(f"no corner ({first},{second}) at vertex {at}")


def eliminate_degree3(rot: Rotations, max_rounds: int | None = None) -> int:
    """Flip edges to remove degree-3 vertices where possible.

    Flipping an opposite edge (a, b) of a degree-3 vertex x to (x, w) raises
    deg(x); candidates are preferred when a and b keep degree >= 4.  Returns
    the number of degree-3 vertices remaining.
    """
    n = len(rot)
    rounds = 0
    limit = max_rounds if max_rounds is not None else 12 * n
    while rounds < limit:
        rounds += 1
        low = sorted(v for v in rot if len(rot[v]) == 3)
        if not low or n <= 5:
            break
        flipped = False
        for x in low:
            if len(rot[x]) != 3:
                continue
            cands = []
            trio = rot[x]
            for t in range(3):
                a, b = trio[t], trio[(t + 1) % 3]
                pa = rot[a].index(b)
                da = len(rot[a])
                side1 = rot[a][(pa - 1) % da]
                side2 = rot[a][(pa + 1) % da]
                w = side1 if side2 == x else side2 if side1 == x else None
                if w is None or w == x or w in rot[x]:
                    continue
                cands.append((min(len(rot[a]), len(rot[b])), a, b))
            cands.sort(key=lambda c: (-c[0], c[1], c[2]))
            for _, a, b in cands:
                if flip_edge(rot, a, b):
                    flipped = True
                    break
            if flipped:
                break
        if not flipped:
            break
    return sum(1 for v in rot if len(rot[v]) == 3)


def random_triangulation(n: int, seed: int, general: bool = False) -> Rotations:
    """Random triangulation on ``n`` vertices, deterministic per seed.

    Stacked growth by default; ``general=True`` grows by random vertex
    splits instead, reaching classes that stacking alone cannot.
    """
    if not general:
        return random_stacked_triangulation(n, seed)
    if n < 4:
        raise ValueError("need n >= 4")
    rng = random.Random(seed)
    rot = k4_rotations()
    for new_id in range(4, n):
        v = rng.choice(sorted(rot))
        choices = list(legal_splits(rot, v))
        i, j = choices[rng.randrange(len(choices))]
        rot = vertex_split(rot, v, i, j, new_id)
    return rot


# -- canonical forms and exhaustive enumeration ------------------------------


def canonical_form(rot: Rotations) -> Tuple[int, ...]:
    """Orientation- and label-invariant signature of a rotation system."""
    best = None
    degs = {v: len(nbrs) for v, nbrs in rot.items()}
    mind = min(degs.values())
    roots = [v for v in rot if degs[v] == mind]
    for root in roots:
        for start in range(degs[root]):
            for direction in (1, -1):
                code = _traverse_code(rot, root, start, direction)
                if best is None or code < best:
                    best = code
    return best


def _traverse_code(rot: Rotations, root: int, start: int, direction: int):
    label = {root: 0}
    order = [root]
    entry = {root: rot[root][start]}
    code: List[int] = []
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        nbrs = rot[u]
        k = len(nbrs)
        p = nbrs.index(entry[u])
        for t in range(k):
            w = nbrs[(p + direction * t) % k]
            if w not in label:
                label[w] = len(order)
                order.append(w)
                entry[w] = u
            code.append(label[w])
        code.append(-1)
    return tuple(code)


def enumerate_triangulations(n: int) -> List[Rotations]:
    """All simple sphere triangulations on ``n`` vertices up to isomorphism
    (reflections identified), generated from K4 by vertex splitting."""
    if n < 4:
        return []
    level: Dict[Tuple[int, ...], Rotations] = {
        canonical_form(k4_rotations()): k4_rotations()
    }
    for size in range(5, n + 1):
        nxt: Dict[Tuple[int, ...], Rotations] = {}
        for rot in level.values():
            for v in sorted(rot):
                for i, j in legal_splits(rot, v):
                    cand = vertex_split(rot, v, i, j, size - 1)
                    key = canonical_form(cand)
                    if key not in nxt:
                        nxt[key] = cand
        level = nxt
    return list(level.values())


# -- duals --------------------------------------------------------------------


def dual_normal_map(rot: Rotations, outer_face: int | None = None) -> NormalMap:
    """Normal map whose regions correspond to the triangulation's vertices.

    Map vertices are the triangulation's faces and map edges reuse the
    primal edge ids.
    """
    emb = embedding_of(rot)
    faces = emb.trace_faces()
    if any(len(f) != 3 for f in faces):
        raise FourColorError("dual_normal_map needs a triangulation")
    dual_rot = {i: [dart_edge(d) for d in face] for i, face in enumerate(faces)}
    try:
        demb = build_embedding(dual_rot)
        if demb.euler_characteristic() != 2:
            raise FourColorError("flip orientation")
    except FourColorError:
        dual_rot = {
            i: [dart_edge(d) for d in reversed(face)] for i, face in enumerate(faces)
        }
        demb = build_embedding(dual_rot)
    return validate_normal_map(demb, outer_face=outer_face)


def dual_face_for_primal_vertex(rot: Rotations, m: NormalMap) -> Dict[int, int]:
    """Match each primal vertex to the dual region surrounding it."""
    edge_rot = as_edge_rotations(rot)
    region_edges = {
        f: frozenset(dart_edge(d) for d in m.faces[f]) for f in range(m.face_count)
    }
    inv: Dict[frozenset, int] = {}
    for f, es in region_edges.items():
        inv[es] = f
    out = {}
    for v, edges in edge_rot.items():
        f = inv.get(frozenset(edges))
        if f is None:
            raise FourColorError("primal-vertex/dual-region correspondence failed")
        out[v] = f
    return out
