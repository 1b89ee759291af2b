"""Digon/triangle removal with an exactly replayable log.

A digon is shrunk to a point: both parallel edges vanish, the two boundary
vertices merge, and the merged degree-2 point is smoothed away by fusing the
two outgoing edges into one fresh edge.  A triangle is shrunk to a point: its
three edges vanish and a fresh vertex picks up the three outgoing edges.
Both moves keep the map cubic, connected and bridgeless.

Every step snapshots the pre-surgery rotation system, so expansion can
rebuild each intermediate map exactly and transfer colors face-by-face via
surviving edge-ends.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from .embedding import PlanarEmbedding, build_embedding, dart_edge, twin
from .errors import FourColorError, ImproperInput
from .normal_map import NormalMap

# Any map with at most this many regions is trivially colorable by giving
# every region its own color, so contraction stops there.
_TRIVIAL_FACES = 4


@dataclass
class ContractionStep:
    kind: str  # "digon" | "triangle"
    face_index: int  # index in the pre-step map
    face_size: int
    removed_vertices: Tuple[int, ...]
    removed_edges: Tuple[int, ...]
    added_vertex: Optional[int]
    added_edge: Optional[int]
    pre_rotations: Dict[int, List[int]]


@dataclass
class ContractionLog:
    steps: List[ContractionStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)


@dataclass
class ContractionResult:
    map: NormalMap
    log: ContractionLog
    degenerate: bool


def _face_keys(m: NormalMap, f: int) -> Set[Tuple[int, int]]:
    """Edge-end keys (edge id, vertex id) of a face walk.

    Keys survive surgery for untouched edge-ends, which is what lets faces
    be matched across a contraction step without relying on dart labels.
    """
    emb = m.embedding
    return {(dart_edge(d), emb.dart_vertex(d)) for d in m.faces[f]}


def _third_edge(rot: List[int], exclude: Set[int]) -> int:
    for e in rot:
        if e not in exclude:
            return e
    raise FourColorError("cubic vertex without a third edge")


def _contract_digon(m: NormalMap, f: int) -> Dict[int, List[int]]:
    emb = m.embedding
    walk = m.faces[f]
    e1, e2 = dart_edge(walk[0]), dart_edge(walk[1])
    u = emb.dart_vertex(walk[0])
    v = emb.dart_vertex(walk[1])
    rot = {w: list(edges) for w, edges in emb.rotations_as_edges().items()}
    f_u = _third_edge(rot[u], {e1, e2})
    f_v = _third_edge(rot[v], {e1, e2})
    ends_u = emb.endpoints(f_u)
    x = ends_u[0] if ends_u[1] == u else ends_u[1]
    ends_v = emb.endpoints(f_v)
    y = ends_v[0] if ends_v[1] == v else ends_v[1]
    if x in (u, v) or y in (u, v) or x == y:
        raise FourColorError("digon contraction hit a degenerate theta form")
    g = max(emb.edges) + 1
    rot[x][rot[x].index(f_u)] = g
    rot[y][rot[y].index(f_v)] = g
    del rot[u]
    del rot[v]
    return rot


def _contract_triangle(m: NormalMap, f: int) -> Dict[int, List[int]]:
    emb = m.embedding
    walk = m.faces[f]
    tri_edges = {dart_edge(d) for d in walk}
    corners = [emb.dart_vertex(d) for d in walk]
    rot = {w: list(edges) for w, edges in emb.rotations_as_edges().items()}
    spokes = []
    for c in corners:
        s = _third_edge(rot[c], tri_edges)
        ends = emb.endpoints(s)
        far = ends[0] if ends[1] == c else ends[1]
        if far in corners:
            raise FourColorError("triangle contraction hit a bridge-like form")
        spokes.append(s)
    w_new = max(emb.vertices) + 1
    for c in corners:
        del rot[c]
    base = {v: list(edges) for v, edges in rot.items()}
    # The cyclic order of the three spokes around the shrunken point depends
    # on orientation; exactly the consistent choice keeps the map on the
    # sphere with coherent face continuations.
    for order in (spokes[::-1], spokes):
        rot[w_new] = order
        try:
            emb2 = build_embedding(rot)
        except FourColorError:
            rot = {v: list(edges) for v, edges in base.items()}
            continue
        if _bridge_free(emb2) and _faces_continuous(m, f, emb2):
            return rot
        rot = {v: list(edges) for v, edges in base.items()}
    raise FourColorError("no planar orientation for contracted triangle")


def _bridge_free(emb: PlanarEmbedding) -> bool:
    faces = emb.trace_faces()
    face_of = {}
    for i, face in enumerate(faces):
        for d in face:
            face_of[d] = i
    return all(face_of[2 * e] != face_of[2 * e + 1] for e in emb.edges)


def _faces_continuous(pre: NormalMap, contracted: int, emb2: PlanarEmbedding) -> bool:
    """Every surviving pre-face must map into a single post-face."""
    post = NormalMap(emb2)
    post_of_key = {}
    for i in range(post.face_count):
        for key in _face_keys(post, i):
            post_of_key[key] = i
    for i in range(pre.face_count):
        if i == contracted:
            continue
        images = {post_of_key[k] for k in _face_keys(pre, i) if k in post_of_key}
        if len(images) != 1:
            return False
    return True


def contract_small_faces(m: NormalMap) -> ContractionResult:
    """Contract lowest-index digons/triangles until none remain.

    Stops with ``degenerate=True`` once the residue has at most four regions
    while small faces remain; such a residue is trivially colorable with
    pairwise-distinct colors.
    """
    log = ContractionLog()
    cur = m
    degenerate = False
    while True:
        small = [f for f in range(cur.face_count) if cur.face_size(f) <= 3]
        if not small:
            break
        if cur.face_count <= _TRIVIAL_FACES:
            degenerate = True
            break
        f = small[0]
        size = cur.face_size(f)
        pre_rot = {v: list(e) for v, e in cur.embedding.rotations_as_edges().items()}
        pre_vertices = set(cur.embedding.vertices)
        pre_edges = set(cur.embedding.edges)
        if size == 2:
            rot = _contract_digon(cur, f)
        else:
            rot = _contract_triangle(cur, f)
        nxt = NormalMap(build_embedding(rot))
        log.steps.append(
            ContractionStep(
                kind="digon" if size == 2 else "triangle",
                face_index=f,
                face_size=size,
                removed_vertices=tuple(sorted(pre_vertices - set(rot))),
                removed_edges=tuple(sorted(pre_edges - {e for r in rot.values() for e in r})),
                added_vertex=next(iter(set(rot) - pre_vertices), None),
                added_edge=next(
                    iter({e for r in rot.values() for e in r} - pre_edges), None
                ),
                pre_rotations=pre_rot,
            )
        )
        cur = nxt
    return ContractionResult(map=cur, log=log, degenerate=degenerate)


def replay_log(contracted: NormalMap, log: ContractionLog) -> NormalMap:
    """Rebuild the original map from the contracted one (exact restore)."""
    if not log.steps:
        return contracted
    return NormalMap(build_embedding(log.steps[0].pre_rotations))


def expand_small_faces(coloring: List[int], log: ContractionLog) -> List[int]:
    """Lift a proper full coloring of the contracted map back to the original.

    Each undone step transfers colors through surviving edge-ends and hands
    the reinserted region a color missing from its (at most three) neighbors.
    """
    colors = list(coloring)
    if any(c == 0 for c in colors):
        raise ImproperInput("contracted coloring has white regions")
    # Rebuild the chain of maps from most-contracted back to the original.
    for step in reversed(log.steps):
        pre = NormalMap(build_embedding(step.pre_rotations))
        post_rot = _post_rotations(step, pre)
        post = NormalMap(build_embedding(post_rot))
        if not _proper(post, colors):
            raise ImproperInput("coloring is not proper on contracted map")
        key_color: Dict[Tuple[int, int], int] = {}
        for i in range(post.face_count):
            for key in _face_keys(post, i):
                key_color[key] = colors[i]
        new_colors = [0] * pre.face_count
        for i in range(pre.face_count):
            if i == step.face_index:
                continue
            found = {key_color[k] for k in _face_keys(pre, i) if k in key_color}
            if len(found) != 1:
                raise ImproperInput("face correspondence lost during expansion")
            new_colors[i] = found.pop()
        used = {new_colors[g] for g in pre.face_neighbors(step.face_index)}
        spare = next(c for c in (1, 2, 3, 4) if c not in used)
        new_colors[step.face_index] = spare
        colors = new_colors
    return colors


def _post_rotations(step: ContractionStep, pre: NormalMap) -> Dict[int, List[int]]:
    if step.face_size == 2:
        return _contract_digon(pre, step.face_index)
    return _contract_triangle(pre, step.face_index)


def _proper(m: NormalMap, colors: List[int]) -> bool:
    for f in range(m.face_count):
        for g in m.face_neighbors(f):
            if colors[f] != 0 and colors[f] == colors[g]:
                return False
    return True
