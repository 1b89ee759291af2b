"""Combinatorial planar embeddings as rotation systems.

A rotation system stores, for every vertex, the cyclic (clockwise) order of
its incident edge-ends.  Edge-ends are encoded as integer *darts*: edge ``e``
owns darts ``2*e`` and ``2*e + 1``, and ``twin(d) == d ^ 1``.  Faces are the
orbits of ``fnext(d) = rotation-successor of twin(d)``; an embedding is
accepted as planar exactly when face tracing satisfies V - E + F = 2.

Vertex and edge ids are arbitrary non-negative integers and need not be
contiguous, which lets surgery (face contraction) preserve ids exactly.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .errors import EulerViolation, InconsistentRotation

Dart = int
Face = Tuple[Dart, ...]


def dart_edge(d: Dart) -> int:
    return d >> 1


def twin(d: Dart) -> Dart:
    return d ^ 1


class PlanarEmbedding:
    """Immutable rotation system with traced faces.

    ``rotations`` maps each vertex to the list of incident edge ids in
    clockwise order; every edge id must occur exactly twice across the whole
    mapping (twice at one vertex for a loop).  The first occurrence in vertex
    order becomes dart ``2e``, the second ``2e + 1``.
    """

    __slots__ = ("rot", "_dart_vertex", "_dart_pos", "_faces", "_endpoints")

    def __init__(self, rotations: Mapping[int, Sequence[int]]):
        seen: Dict[int, int] = {}
        rot: Dict[int, Tuple[Dart, ...]] = {}
        dart_vertex: Dict[Dart, int] = {}
        dart_pos: Dict[Dart, int] = {}
        for v in sorted(rotations):
            darts: List[Dart] = []
            for edge in rotations[v]:
                count = seen.get(edge, 0)
                if count >= 2:
                    raise InconsistentRotation(
                        f"edge {edge} appears more than twice"
                    )
                d = 2 * edge + count
                seen[edge] = count + 1
                dart_pos[d] = len(darts)
                darts.append(d)
                dart_vertex[d] = v
            rot[v] = tuple(darts)
        for edge, count in seen.items():
            if count != 2:
                raise InconsistentRotation(
                    f"edge {edge} appears {count} time(s), expected 2"
                )
        self.rot = rot
        self._dart_vertex = dart_vertex
        self._dart_pos = dart_pos
        self._endpoints = {
            e: (dart_vertex[2 * e], dart_vertex[2 * e + 1]) for e in self.edges
        }
        self._faces: Tuple[Face, ...] | None = None

    @classmethod
    def from_neighbors(cls, neighbors: Mapping[int, Sequence[int]]) -> "PlanarEmbedding":
        """Build from cyclic neighbor lists of a simple graph.

        Edge ids are assigned by sorted endpoint pairs, so two embeddings of
        the same simple graph share edge ids.
        """
        pairs = sorted(
            {(min(u, v), max(u, v)) for u, nbrs in neighbors.items() for v in nbrs}
        )
        edge_id = {p: i for i, p in enumerate(pairs)}
        rotations = {
            u: [edge_id[(min(u, v), max(u, v))] for v in nbrs]
            for u, nbrs in neighbors.items()
        }
        return cls(rotations)

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> List[int]:
        return sorted(self.rot)

    @property
    def edges(self) -> List[int]:
        return sorted({dart_edge(d) for d in self._dart_vertex})

    @property
    def vertex_count(self) -> int:
        return len(self.rot)

    @property
    def edge_count(self) -> int:
        return len(self._dart_vertex) // 2

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def dart_vertex(self, d: Dart) -> int:
        return self._dart_vertex[d]

    def endpoints(self, e: int) -> Tuple[int, int]:
        """(vertex of dart 2e, vertex of dart 2e+1)."""
        return self._endpoints[e]

    def darts(self) -> Iterable[Dart]:
        return self._dart_vertex.keys()

    def next_at_vertex(self, d: Dart) -> Dart:
        v = self._dart_vertex[d]
        darts = self.rot[v]
        return darts[(self._dart_pos[d] + 1) % len(darts)]

    def prev_at_vertex(self, d: Dart) -> Dart:
        v = self._dart_vertex[d]
        darts = self.rot[v]
        return darts[(self._dart_pos[d] - 1) % len(darts)]

    def fnext(self, d: Dart) -> Dart:
        """Successor of ``d`` along its face walk."""
        return self.next_at_vertex(twin(d))

    # -- faces and validity ------------------------------------------------

    def trace_faces(self) -> Tuple[Face, ...]:
        """All face walks, each starting at its smallest dart."""
        if self._faces is not None:
            return self._faces
        remaining = set(self._dart_vertex)
        faces: List[Face] = []
        for start in sorted(self._dart_vertex):
            if start not in remaining:
                continue
            walk = [start]
            remaining.discard(start)
            d = self.fnext(start)
            while d != start:
                walk.append(d)
                remaining.discard(d)
                d = self.fnext(d)
            faces.append(tuple(walk))
        faces.sort(key=lambda f: f[0])
        self._faces = tuple(faces)
        return self._faces

    @property
    def face_count(self) -> int:
        return len(self.trace_faces())

    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count

    def is_connected(self) -> bool:
        if not self.rot:
            return True
        verts = self.vertices
        adj: Dict[int, List[int]] = {v: [] for v in verts}
        for e in self.edges:
            u, v = self.endpoints(e)
            adj[u].append(v)
            adj[v].append(u)
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    def neighbors(self, v: int) -> List[int]:
        """Neighbor vertices in rotation order (repeats for multi-edges)."""
        out = []
        for d in self.rot[v]:
            out.append(self._dart_vertex[twin(d)])
        return out

    def adjacency(self) -> Dict[int, List[int]]:
        return {v: self.neighbors(v) for v in self.vertices}

    def rotations_as_edges(self) -> Dict[int, List[int]]:
        """Inverse of the constructor input (edge ids per vertex, in order)."""
        return {v: [dart_edge(d) for d in darts] for v, darts in self.rot.items()}

    def __eq__(self, other) -> bool:
        return isinstance(other, PlanarEmbedding) and self.rot == other.rot

    def __hash__(self):
        return hash(tuple(sorted(self.rot.items())))


def build_embedding(rotations: Mapping[int, Sequence[int]]) -> PlanarEmbedding:
    """Validate rotation data and return a genus-0 embedding.

    Raises InconsistentRotation for malformed edge-end references and
    EulerViolation when face tracing does not close up to a sphere.
    """
    emb = PlanarEmbedding(rotations)
    chi = emb.euler_characteristic()
    if chi != 2:
        raise EulerViolation(
            f"V - E + F = {emb.vertex_count} - {emb.edge_count} + "
            f"{emb.face_count} = {chi}, expected 2"
        )
    return emb
