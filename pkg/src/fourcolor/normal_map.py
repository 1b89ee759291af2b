"""Normal maps: cubic, bridgeless sphere embeddings with traced regions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from .embedding import Dart, Face, PlanarEmbedding, dart_edge, twin
from .errors import Disconnected, HasBridge, NotCubic


class NormalMap:
    """A validated cubic bridgeless map with a designated outer region.

    Faces are first-class objects addressed by index into ``faces``.  The
    dual is a multigraph (faces may share several borders) but coloring
    logic only ever consults :meth:`face_neighbors`, the simple relation.
    """

    __slots__ = (
        "embedding",
        "faces",
        "outer_face",
        "_face_of_dart",
        "_neighbors",
        "_border_edges",
    )

    def __init__(self, embedding: PlanarEmbedding, outer_face: Optional[int] = None):
        self.embedding = embedding
        self.faces: Tuple[Face, ...] = embedding.trace_faces()
        self._face_of_dart: Dict[Dart, int] = {}
        for i, face in enumerate(self.faces):
            for d in face:
                self._face_of_dart[d] = i
        if outer_face is None:
            outer_face = max(
                range(len(self.faces)), key=lambda i: (len(self.faces[i]), -i)
            )
        self.outer_face = outer_face
        neighbors: List[Set[int]] = [set() for _ in self.faces]
        border: Dict[FrozenSet[int], List[int]] = {}
        for e in embedding.edges:
            a = self._face_of_dart[2 * e]
            b = self._face_of_dart[2 * e + 1]
            neighbors[a].add(b)
            neighbors[b].add(a)
            border.setdefault(frozenset((a, b)), []).append(e)
        self._neighbors = [tuple(sorted(s)) for s in neighbors]
        self._border_edges = border

    # -- queries ------------------------------------------------------------

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def vertex_count(self) -> int:
        return self.embedding.vertex_count

    @property
    def edge_count(self) -> int:
        return self.embedding.edge_count

    def face_size(self, f: int) -> int:
        return len(self.faces[f])

    def face_of_dart(self, d: Dart) -> int:
        return self._face_of_dart[d]

    def face_neighbors(self, f: int) -> Tuple[int, ...]:
        """Faces sharing at least one border edge with ``f`` (simple dual)."""
        return self._neighbors[f]

    def border_edges(self, f: int, g: int) -> List[int]:
        return self._border_edges.get(frozenset((f, g)), [])

    def face_vertices(self, f: int) -> List[int]:
        return [self.embedding.dart_vertex(d) for d in self.faces[f]]

    def faces_at_vertex(self, v: int) -> Tuple[int, ...]:
        """The three faces around a vertex, in rotation order."""
        return tuple(self._face_of_dart[d] for d in self.embedding.rot[v])

    def dual_adjacency(self) -> List[Tuple[int, ...]]:
        return list(self._neighbors)

    def with_outer_face(self, outer: int) -> "NormalMap":
        """Re-designate the outer region (pure relabeling, same embedding)."""
        return NormalMap(self.embedding, outer_face=outer)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NormalMap)
            and self.embedding == other.embedding
            and self.outer_face == other.outer_face
        )


def validate_normal_map(
    embedding: PlanarEmbedding, outer_face: Optional[int] = None
) -> NormalMap:
    """Check cubic/bridgeless/connected and wrap into a NormalMap.

    Raises NotCubic, Disconnected or HasBridge.  The outer face defaults to
    the largest region (lowest index on ties).
    """
    for v in embedding.vertices:
        if embedding.degree(v) != 3:
            raise NotCubic(f"vertex {v} has degree {embedding.degree(v)}")
    if not embedding.is_connected():
        raise Disconnected("embedding is not connected")
    faces = embedding.trace_faces()
    face_of: Dict[Dart, int] = {}
    for i, face in enumerate(faces):
        for d in face:
            face_of[d] = i
    for e in embedding.edges:
        if face_of[2 * e] == face_of[2 * e + 1]:
            raise HasBridge(f"edge {e} has face {face_of[2 * e]} on both sides")
    return NormalMap(embedding, outer_face=outer_face)


@dataclass
class EulerStats:
    """Face-size census: ``p[k]`` counts regions with exactly k sides."""

    p: Dict[int, int]
    k_max: int

    @property
    def face_total(self) -> int:
        return sum(self.p.values())


def euler_polygon_check(m: NormalMap) -> Tuple[EulerStats, bool]:
    """Evaluate 4*p2 + 3*p3 + 2*p4 + p5 == sum_{k>=7} (k-6)*p_k + 12.

    The identity is forced by Euler's formula on every cubic sphere map, so
    the returned flag is True for every valid NormalMap; both sides are
    computed in exact integer arithmetic.
    """
    p: Dict[int, int] = {}
    for f in range(m.face_count):
        k = m.face_size(f)
        p[k] = p.get(k, 0) + 1
    k_max = max(p) if p else 0
    lhs = 4 * p.get(2, 0) + 3 * p.get(3, 0) + 2 * p.get(4, 0) + p.get(5, 0)
    rhs = sum((k - 6) * cnt for k, cnt in p.items() if k >= 7) + 12
    return EulerStats(p=p, k_max=k_max), lhs == rhs
