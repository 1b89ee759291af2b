"""Vertex coloring on maximal planar graphs: Kempe's algorithm, impasse
detection, triangulated-ring generators and their twin bad examples.

Vertex colors are {1: R, 2: B, 3: Y, 4: G}; 0 means white (awaiting color).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .errors import (
    FourColorError,
    MalformedInstance,
    NotBeta,
    OddCycleRing,
    SearchExhausted,
)
from .triangulations import Rotations, embedding_of, is_triangulation, oriented_faces

VWHITE = 0
R, B, Y, G = 1, 2, 3, 4
VCOLOR_NAMES = {VWHITE: "white", R: "R", B: "B", Y: "Y", G: "G"}
VCOLOR_IDS = {name: cid for cid, name in VCOLOR_NAMES.items()}


@dataclass
class MaximalPlanarGraph:
    """A triangulation of the sphere, carried as a rotation system."""

    rotations: Rotations

    def __post_init__(self):
        if not is_triangulation(self.rotations):
            raise MalformedInstance("not a maximal planar rotation system")

    @property
    def n(self) -> int:
        return len(self.rotations)

    @property
    def vertices(self) -> List[int]:
        return sorted(self.rotations)

    def neighbors(self, v: int) -> List[int]:
        return list(self.rotations[v])

    def adjacency(self) -> Dict[int, List[int]]:
        return {v: list(ns) for v, ns in self.rotations.items()}

    def edge_count(self) -> int:
        return sum(len(ns) for ns in self.rotations.values()) // 2

    def faces(self) -> List[Tuple[int, ...]]:
        return oriented_faces(self.rotations)


def rotations_from_triangles(
    triangles: Sequence[Tuple[int, int, int]]
) -> Rotations:
    """Rotation system of a sphere triangulation given as triangle list.

    Input triangles may be arbitrarily oriented; a consistent orientation
    is found by propagation (each edge must be traversed once per
    direction), then each vertex's rotation is chained from the rule that
    oriented face (x, y, z) makes z follow x at y.
    """
    by_edge: Dict[FrozenSet[int], List[int]] = {}
    for i, tri in enumerate(triangles):
        for t in range(3):
            e = frozenset((tri[t], tri[(t + 1) % 3]))
            by_edge.setdefault(e, []).append(i)
    if any(len(fs) != 2 for fs in by_edge.values()):
        raise FourColorError("triangle list is not a closed surface")
    oriented: Dict[int, Tuple[int, int, int]] = {0: tuple(triangles[0])}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        a, b, c = oriented[i]
        for u, v in ((a, b), (b, c), (c, a)):
            j = next(x for x in by_edge[frozenset((u, v))] if x != i)
            if j in oriented:
                continue
            tri = list(triangles[j])
            third = next(x for x in tri if x not in (u, v))
            oriented[j] = (v, u, third)
            queue.append(j)
    if len(oriented) != len(triangles):
        raise FourColorError("triangle list is not connected")
    _check_orientation(oriented.values())
    succ: Dict[int, Dict[int, int]] = {}
    for x, y, z in oriented.values():
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            succ.setdefault(b, {})[a] = c
    rot: Rotations = {}
    for v, table in succ.items():
        start = min(table)
        cycle = [start]
        while True:
            nxt = table[cycle[-1]]
            if nxt == start:
                break
            cycle.append(nxt)
        if len(cycle) != len(table):
            raise FourColorError(f"rotation at vertex {v} is not a single cycle")
        rot[v] = cycle
    return rot


def _check_orientation(faces) -> None:
    seen = set()
    for x, y, z in faces:
        for d in ((x, y), (y, z), (z, x)):
            if d in seen:
                raise FourColorError("inconsistent orientation")
            seen.add(d)


# -- Kempe chains ------------------------------------------------------------


@dataclass
class KempeChainV:
    vertices: FrozenSet[int]
    pair: Tuple[int, int]


def kempe_chain(
    g: MaximalPlanarGraph | Dict[int, List[int]],
    colors: Dict[int, int],
    start: int,
    pair: Tuple[int, int],
) -> KempeChainV:
    adj = g.adjacency() if isinstance(g, MaximalPlanarGraph) else g
    if colors.get(start, VWHITE) not in pair:
        raise MalformedInstance("start vertex not colored within the pair")
    comp = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in comp and colors.get(w, VWHITE) in pair:
                comp.add(w)
                stack.append(w)
    return KempeChainV(vertices=frozenset(comp), pair=tuple(pair))


def kempe_switch(
    g: MaximalPlanarGraph | Dict[int, List[int]],
    colors: Dict[int, int],
    chain: KempeChainV,
) -> Dict[int, int]:
    a, b = chain.pair
    out = dict(colors)
    for v in chain.vertices:
        if out[v] == a:
            out[v] = b
        elif out[v] == b:
            out[v] = a
    return out


def proper_vertex_coloring(
    adj: Dict[int, List[int]], colors: Dict[int, int]
) -> bool:
    for u, nbrs in adj.items():
        cu = colors.get(u, VWHITE)
        if cu == VWHITE:
            continue
        for w in nbrs:
            if w > u and colors.get(w, VWHITE) == cu:
                return False
    return True


# -- Kempe's algorithm --------------------------------------------------------


@dataclass
class ImpasseTrace:
    vertex: int
    neighbor_cycle: List[int]
    neighbor_colors: List[int]
    attempts: List[dict] = field(default_factory=list)
    note: str = ""
    coloring: Dict[int, int] = field(default_factory=dict)


def _free_color(adj, colors, v) -> Optional[int]:
    used = {colors.get(w, VWHITE) for w in adj[v]}
    for c in (R, B, Y, G):
        if c not in used:
            return c
    return None


def _cyclic_neighbors(rot: Rotations, removed: Set[int], v: int) -> List[int]:
    return [w for w in rot[v] if w not in removed]


def kempe_four_color(
    g: MaximalPlanarGraph, partial: Optional[Dict[int, int]] = None
):
    """Kempe's historical algorithm: returns a coloring or an ImpasseTrace.

    Vertices of degree at most five are removed recursively and re-inserted;
    a degree-five reinsertion with four neighbor colors first tries the two
    chain-connectivity switches, then the classical simultaneous double
    switch, whose possible properness violation is the famous flaw.

    With ``partial`` given (one white vertex, the rest properly colored),
    only the reinsertion of the white vertex is attempted.
    """
    rot = g.rotations
    adj = g.adjacency()
    if partial is not None:
        whites = [v for v in adj if partial.get(v, VWHITE) == VWHITE]
        if len(whites) != 1:
            raise MalformedInstance("need exactly one white vertex")
        if not proper_vertex_coloring(adj, partial):
            raise MalformedInstance("partial coloring is improper")
        colors = dict(partial)
        return _reinsert(rot, adj, set(), colors, whites[0])

    removed: List[int] = []
    removed_set: Set[int] = set()
    degrees = {v: len(adj[v]) for v in adj}
    while len(removed) < len(adj) - 4:
        candidates = [v for v in adj if v not in removed_set]
        v = min(candidates, key=lambda x: (degrees[x], x))
        removed.append(v)
        removed_set.add(v)
        for w in adj[v]:
            if w not in removed_set:
                degrees[w] -= 1
    colors: Dict[int, int] = {}
    base = [v for v in adj if v not in removed_set]
    for i, v in enumerate(sorted(base)):
        colors[v] = (R, B, Y, G)[i]
    for v in reversed(removed):
        removed_set.discard(v)
        result = _reinsert(rot, adj, removed_set, colors, v)
        if isinstance(result, ImpasseTrace):
            return result
        colors = result
    return colors


def _reinsert(rot, adj, removed_set, colors, v):
    live = [w for w in adj[v] if w not in removed_set]
    used = {colors[w] for w in live}
    spare = next((c for c in (R, B, Y, G) if c not in used), None)
    if spare is not None:
        out = dict(colors)
        out[v] = spare
        return out
    cyc = _cyclic_neighbors(rot, removed_set, v)
    ncolors = [colors[w] for w in cyc]
    trace = ImpasseTrace(
        vertex=v,
        neighbor_cycle=cyc,
        neighbor_colors=ncolors,
        coloring=dict(colors),
    )
    sub_adj = {
        u: [x for x in adj[u] if x not in removed_set and x != v]
        for u in adj
        if u not in removed_set and u != v
    }
    if len(cyc) == 4:
        return _reinsert_deg4(sub_adj, colors, v, cyc, trace)
    if len(cyc) == 5:
        return _reinsert_deg5(sub_adj, colors, v, cyc, trace)
    trace.note = f"degree {len(cyc)} reinsertion with no spare color"
    return trace


def _reinsert_deg4(sub_adj, colors, v, cyc, trace):
    n1, n2, n3, n4 = cyc
    for a, b in ((n1, n3), (n2, n4)):
        pair = (colors[a], colors[b])
        chain = kempe_chain(sub_adj, colors, a, pair)
        connected = b in chain.vertices
        trace.attempts.append(
            {
                "kind": "single",
                "pair": pair,
                "start": a,
                "connected": connected,
            }
        )
        if not connected:
            out = kempe_switch(sub_adj, colors, chain)
            out[v] = pair[0]
            if proper_vertex_coloring(sub_adj, out):
                return out
    trace.note = "quadrilateral case failed (should be impossible)"
    return trace


def _reinsert_deg5(sub_adj, colors, v, cyc, trace):
    ncolors = [colors[w] for w in cyc]
    dup = next(c for c in ncolors if ncolors.count(c) == 2)
    positions = [i for i, c in enumerate(ncolors) if c == dup]
    a1, a2 = positions
    if (a2 - a1) % 5 != 2:
        a1, a2 = a2, a1
    p = cyc[(a1 + 1) % 5]
    q = cyc[(a2 + 1) % 5]
    r_ = cyc[(a2 + 2) % 5]
    # Two chain-connectivity switches of the classical argument.
    for target in (q, r_):
        pair = (colors[p], colors[target])
        chain = kempe_chain(sub_adj, colors, p, pair)
        connected = target in chain.vertices
        trace.attempts.append(
            {
                "kind": "single",
                "pair": pair,
                "start": p,
                "connected": connected,
            }
        )
        if not connected:
            out = kempe_switch(sub_adj, colors, chain)
            out[v] = colors[p]
            if proper_vertex_coloring(sub_adj, out):
                return out
    # Both chains connect: the simultaneous double switch.  Both chains are
    # computed from the same starting coloring and their swaps applied in
    # sequence; overlapping chains are exactly the historical tangling.
    u1, u3 = cyc[a1], cyc[a2]
    chain1 = kempe_chain(sub_adj, colors, u1, (dup, colors[q]))
    chain2 = kempe_chain(sub_adj, colors, u3, (dup, colors[r_]))
    out = dict(colors)
    for w in chain1.vertices:
        if out[w] == dup:
            out[w] = colors[q]
        elif out[w] == colors[q]:
            out[w] = dup
    for w in chain2.vertices:
        if out[w] == dup:
            out[w] = colors[r_]
        elif out[w] == colors[r_]:
            out[w] = dup
    trace.attempts.append(
        {
            "kind": "double",
            "pairs": [(dup, colors[q]), (dup, colors[r_])],
            "starts": [u1, u3],
        }
    )
    if not proper_vertex_coloring(sub_adj, out):
        trace.note = "double switch tangled: properness violated"
        return trace
    out[v] = dup
    if proper_vertex_coloring(sub_adj, out):
        return out
    trace.note = "double switch left the neighborhood four-colored"
    return trace


# -- impasse detection ---------------------------------------------------------


def is_impasse(
    g: MaximalPlanarGraph, partial: Dict[int, int]
) -> Tuple[bool, List[dict]]:
    """Exhaustive single-switch (plus classical double-switch) check.

    True iff no single Kempe-chain switch anywhere in the graph, and not
    the degree-five double switch either, frees a color for the white
    vertex.  The evidence lists every attempt; each is evaluated from the
    input coloring, so the verdict cannot depend on attempt order.
    """
    adj = g.adjacency()
    whites = [v for v in adj if partial.get(v, VWHITE) == VWHITE]
    if len(whites) != 1:
        raise MalformedInstance("need exactly one white vertex")
    v = whites[0]
    if not proper_vertex_coloring(adj, partial):
        raise MalformedInstance("partial coloring is improper")
    if _free_color(adj, partial, v) is not None:
        return False, [{"kind": "spare", "freed": True}]
    evidence: List[dict] = []
    sub_adj = {u: [x for x in adj[u] if x != v] for u in adj if u != v}
    pairs = [(a, b) for a in (R, B, Y, G) for b in (R, B, Y, G) if a < b]
    resolvable = False
    for pair in pairs:
        seen: Set[int] = set()
        for start in sorted(sub_adj):
            if partial.get(start, VWHITE) not in pair or start in seen:
                continue
            chain = kempe_chain(sub_adj, partial, start, pair)
            seen |= chain.vertices
            switched = kempe_switch(sub_adj, partial, chain)
            freed = (
                len({switched[w] for w in adj[v]}) <= 3
                and proper_vertex_coloring(sub_adj, switched)
            )
            evidence.append(
                {
                    "kind": "single",
                    "pair": pair,
                    "start": start,
                    "chain_size": len(chain.vertices),
                    "freed": freed,
                }
            )
            if freed:
                resolvable = True
    if len(adj[v]) == 5:
        trace = ImpasseTrace(
            vertex=v,
            neighbor_cycle=_cyclic_neighbors(g.rotations, set(), v),
            neighbor_colors=[],
            coloring=dict(partial),
        )
        result = _reinsert_deg5(
            sub_adj,
            partial,
            v,
            _cyclic_neighbors(g.rotations, set(), v),
            trace,
        )
        freed = not isinstance(result, ImpasseTrace)
        evidence.append({"kind": "double", "freed": freed})
        if freed:
            resolvable = True
    return (not resolvable), evidence


# -- impasse resolution ---------------------------------------------------------


def _two_colored_even_cycles(adj, colors, max_len=8):
    """Chordless even cycles whose vertices use exactly two colors."""
    from .rings import _chordless_cycles

    cycles = []
    for cyc in _chordless_cycles({u: sorted(ns) for u, ns in adj.items()}):
        if len(cyc) % 2 or len(cyc) > max_len:
            continue
        cs = {colors.get(x, VWHITE) for x in cyc}
        if VWHITE in cs or len(cs) != 2:
            continue
        cycles.append(cyc)
    return cycles


def resolve_impasse(
    g: MaximalPlanarGraph, partial: Dict[int, int], budget: int = 4
) -> Dict[int, int]:
    """Bounded search for a proper completion of a bad configuration.

    Moves: Kempe-chain switches (each costs one unit of ``budget``), at
    most one color shift along a 2-colored even cycle, and at most one
    "joker" recoloring of a single vertex to another legal color.  Raises
    SearchExhausted when the budget is spent without success.
    """
    adj = g.adjacency()
    whites = [v for v in adj if partial.get(v, VWHITE) == VWHITE]
    if not whites:
        return dict(partial)
    if len(whites) != 1:
        raise MalformedInstance("need exactly one white vertex")
    v = whites[0]
    sub_adj = {u: [x for x in adj[u] if x != v] for u in adj if u != v}
    pairs = [(a, b) for a in (R, B, Y, G) for b in (R, B, Y, G) if a < b]
    start_key = tuple(sorted(partial.items()))
    seen = {start_key}
    queue = deque([(partial, 0, False, False)])
    while queue:
        colors, switches, shifted, jokered = queue.popleft()
        free = _free_color(adj, colors, v)
        if free is not None:
            out = dict(colors)
            out[v] = free
            return out
        moves: List[Dict[int, int]] = []
        signature: List[Tuple] = []
        if switches < budget:
            for pair in pairs:
                covered: Set[int] = set()
                for start in sorted(sub_adj):
                    if colors.get(start, VWHITE) not in pair or start in covered:
                        continue
                    chain = kempe_chain(sub_adj, colors, start, pair)
                    covered |= chain.vertices
                    nxt = kempe_switch(sub_adj, colors, chain)
                    if proper_vertex_coloring(sub_adj, nxt):
                        moves.append(nxt)
                        signature.append((switches + 1, shifted, jokered))
        if not shifted:
            for cyc in _two_colored_even_cycles(sub_adj, colors):
                nxt = dict(colors)
                a, b = sorted({colors[x] for x in cyc})
                for x in cyc:
                    nxt[x] = b if colors[x] == a else a
                if proper_vertex_coloring(sub_adj, nxt):
                    moves.append(nxt)
                    signature.append((switches, True, jokered))
        if not jokered:
            for u in sorted(sub_adj):
                cu = colors.get(u, VWHITE)
                if cu == VWHITE:
                    continue
                for c in (R, B, Y, G):
                    if c == cu:
                        continue
                    if all(
                        colors.get(w, VWHITE) != c for w in sub_adj[u]
                    ):
                        nxt = dict(colors)
                        nxt[u] = c
                        moves.append(nxt)
                        signature.append((switches, shifted, True))
        for nxt, (sw, sh, jo) in zip(moves, signature):
            key = tuple(sorted(nxt.items()))
            if key not in seen:
                seen.add(key)
                queue.append((nxt, sw, sh, jo))
    raise SearchExhausted(f"no resolution within {budget} switchings")


# -- triangulated rings and the twin generator ---------------------------------


@dataclass
class TriangulatedRing:
    inner_cycle: List[int]
    outer_cycle: List[int]
    triangles: List[Tuple[int, int, int]]
    beta: bool


def build_triangulated_ring(
    inner_size: int, outer_size: int, twist: int = 0
) -> TriangulatedRing:
    """Antiprism-style ring: inner cycle 0..k-1, outer cycle k..2k-1.

    Inner vertex i is joined to outer vertices i+twist and i+twist+1; only
    equal even sizes are used by the generator.
    """
    if inner_size != outer_size:
        raise FourColorError("only equal cycle sizes are supported")
    k = inner_size
    inner = list(range(k))
    outer = [k + i for i in range(k)]
    triangles = []
    for i in range(k):
        triangles.append(
            (inner[i], inner[(i + 1) % k], outer[(i + twist + 1) % k])
        )
        triangles.append(
            (outer[(i + twist) % k], outer[(i + twist + 1) % k], inner[i])
        )
    ring = TriangulatedRing(
        inner_cycle=inner,
        outer_cycle=outer,
        triangles=triangles,
        beta=True,
    )
    ring.beta = check_ring_beta(ring)
    return ring


def check_ring_beta(ring: TriangulatedRing) -> bool:
    cyc_edges = set()
    for cycle in (ring.inner_cycle, ring.outer_cycle):
        k = len(cycle)
        for i in range(k):
            cyc_edges.add(frozenset((cycle[i], cycle[(i + 1) % k])))
    for tri in ring.triangles:
        edges = [
            frozenset((tri[t], tri[(t + 1) % 3])) for t in range(3)
        ]
        if sum(e in cyc_edges for e in edges) != 1:
            return False
    return True


def color_triangulated_ring(ring: TriangulatedRing) -> Dict[int, int]:
    """2-color each cycle with a disjoint color pair (inner B/R, outer G/Y)."""
    if len(ring.inner_cycle) % 2 or len(ring.outer_cycle) % 2:
        raise OddCycleRing("both cycles must have even length")
    if not ring.beta:
        raise NotBeta("ring is not a beta-triangulation")
    colors: Dict[int, int] = {}
    for i, u in enumerate(ring.inner_cycle):
        colors[u] = B if i % 2 == 0 else R
    for i, w in enumerate(ring.outer_cycle):
        colors[w] = G if i % 2 == 0 else Y
    adj: Dict[int, List[int]] = {}
    for tri in ring.triangles:
        for t in range(3):
            a, b = tri[t], tri[(t + 1) % 3]
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
    if not proper_vertex_coloring(adj, colors):
        raise NotBeta("coloring conflict: ring is not beta after all")
    return colors


@dataclass
class GeneratorGraph:
    graph: MaximalPlanarGraph
    ring: TriangulatedRing
    inner_edge: Tuple[int, int]  # joined to the inner cycle's disk
    outer_edge: Tuple[int, int]  # joined to the outer cycle's disk
    coloring: Dict[int, int]
    decomposition: Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]
    triangles: List[Tuple[int, int, int]]


# Attachment parameters found by exhaustive search over the construction
# family: fan arcs, ring twist and deletion targets for which BOTH derived
# twins defeat every single Kempe switch and the classical double switch.
_GENERATOR_PARAMS = {
    6: dict(
        inner_start=5, inner_size=4, outer_start=3, outer_size=4, twist=5
    ),
    4: dict(
        inner_start=0, inner_size=2, outer_start=0, outer_size=2, twist=0
    ),
}
_DELETION_TARGETS = {
    # (inner trouble, outer trouble): index pairs resolved in
    # derive_twin_bad_examples; each pair opens a pentagon around the
    # locked edge.
    6: (((0, 2), (1, 2)), ((2, 6), (3, 6))),
    4: (((1, 1), (1, 2)), ((3, 4), (3, 7))),
}


def build_generator_graph(ring_size: int) -> GeneratorGraph:
    """Maximal planar graph with handcuff cycles locking two edges.

    The inner edge pair is colored with the outer cycle's colors and vice
    versa; the handcuff cycles make those colors immovable by single Kempe
    switches, which is what the twin bad examples exploit.
    """
    if ring_size not in (4, 6):
        raise FourColorError("ring_size must be 4 or 6")
    k = ring_size
    p = _GENERATOR_PARAMS[k]
    ring = build_triangulated_ring(k, k, twist=p["twist"])
    inner = ring.inner_cycle  # 0..k-1
    outer = ring.outer_cycle  # k..2k-1
    ei = (2 * k, 2 * k + 1)  # joined to the inner cycle
    eo = (2 * k + 2, 2 * k + 3)  # joined to the outer cycle
    triangles = list(ring.triangles)
    a, b = ei
    fan_a = [inner[(p["inner_start"] + i) % k] for i in range(p["inner_size"])]
    fan_b = [
        inner[(p["inner_start"] + p["inner_size"] - 1 + i) % k]
        for i in range(k - p["inner_size"] + 2)
    ]
    triangles += _fan(a, b, fan_a, fan_b)
    c, d = eo
    fan_c = [outer[(p["outer_start"] + i) % k] for i in range(p["outer_size"])]
    fan_d = [
        outer[(p["outer_start"] + p["outer_size"] - 1 + i) % k]
        for i in range(k - p["outer_size"] + 2)
    ]
    triangles += _fan(c, d, fan_c, fan_d)
    rot = rotations_from_triangles(triangles)
    graph = MaximalPlanarGraph(rot)
    colors: Dict[int, int] = {}
    for i, u in enumerate(inner):
        colors[u] = B if i % 2 == 0 else R
    for i, w in enumerate(outer):
        colors[w] = Y if i % 2 == 0 else G
    colors[a], colors[b] = Y, G
    colors[c], colors[d] = R, B
    adj = graph.adjacency()
    if not proper_vertex_coloring(adj, colors):
        raise FourColorError("generator coloring is improper")
    d1 = _cycle_edges(inner) + [tuple(sorted(eo))]
    d2 = _cycle_edges(outer) + [tuple(sorted(ei))]
    gen = GeneratorGraph(
        graph=graph,
        ring=ring,
        inner_edge=ei,
        outer_edge=eo,
        coloring=colors,
        decomposition=(d1, d2),
        triangles=triangles,
    )
    if not check_beta_triangulation(graph, gen.decomposition):
        raise FourColorError("generator decomposition is not beta")
    return gen


def _fan(a, b, fan_a, fan_b):
    """Triangles of two vertices a--b stitched along complementary arcs."""
    tris = [(a, b, fan_a[-1]), (a, b, fan_a[0])]
    for i in range(len(fan_a) - 1):
        tris.append((a, fan_a[i], fan_a[i + 1]))
    for i in range(len(fan_b) - 1):
        tris.append((b, fan_b[i], fan_b[i + 1]))
    return tris


def _cycle_edges(cycle: List[int]) -> List[Tuple[int, int]]:
    k = len(cycle)
    return [
        tuple(sorted((cycle[i], cycle[(i + 1) % k])))  # type: ignore[misc]
        for i in range(k)
    ]


def check_beta_triangulation(
    g: MaximalPlanarGraph,
    decomposition: Tuple[Sequence[Tuple[int, int]], Sequence[Tuple[int, int]]],
) -> bool:
    """Every triangular face holds exactly one decomposition edge."""
    chosen = {frozenset(e) for part in decomposition for e in part}
    for face in g.faces():
        if len(face) != 3:
            return False
        edges = [
            frozenset((face[t], face[(t + 1) % 3])) for t in range(3)
        ]
        if sum(e in chosen for e in edges) != 1:
            return False
    return True


@dataclass
class BadExample:
    graph: MaximalPlanarGraph
    coloring: Dict[int, int]  # white at the apex
    apex: int
    pentagon: List[int]


def derive_twin_bad_examples(
    gen: GeneratorGraph,
    inner_pair: Optional[Tuple[Tuple[int, int], Tuple[int, int]]] = None,
    outer_pair: Optional[Tuple[Tuple[int, int], Tuple[int, int]]] = None,
) -> Tuple[BadExample, BadExample]:
    """The two twins: trouble in the inner face and in the outer face.

    Deleting two disk edges opens a pentagon holding the locked edge; an
    apex joined to that pentagon sees all four colors, and the handcuff
    cycles defeat every Kempe switch.  The default deletion pairs are the
    searched-and-validated ones; custom pairs may be passed as long as
    they open a four-colored pentagon.
    """
    k = len(gen.ring.inner_cycle)
    ends = (*gen.inner_edge, *gen.outer_edge)
    defaults = _DELETION_TARGETS[k]
    if inner_pair is None:
        inner_pair = tuple(
            (ends[sel], vid) for sel, vid in defaults[0]
        )  # type: ignore[assignment]
    if outer_pair is None:
        outer_pair = tuple(
            (ends[sel], vid) for sel, vid in defaults[1]
        )  # type: ignore[assignment]
    g1 = _apex_after_deletion(gen, inner_pair)
    g2 = _apex_after_deletion(gen, outer_pair)
    return g1, g2


def _apex_after_deletion(gen: GeneratorGraph, pair) -> BadExample:
    (e1, e2) = ({frozenset(pair[0])}, {frozenset(pair[1])})
    gone = e1 | e2
    keep = []
    hole_edges: Dict[FrozenSet[int], int] = {}
    for tri in gen.triangles:
        edges = [frozenset((tri[t], tri[(t + 1) % 3])) for t in range(3)]
        if any(e in gone for e in edges):
            for e in edges:
                if e not in gone:
                    hole_edges[e] = hole_edges.get(e, 0) + 1
            continue
        keep.append(tri)
    boundary = [e for e, cnt in hole_edges.items() if cnt == 1]
    cycle = _edge_cycle(boundary)
    if len(cycle) != 5:
        raise FourColorError("deletion did not open a pentagon")
    apex = max(gen.graph.vertices) + 1
    for i in range(5):
        keep.append((cycle[i], cycle[(i + 1) % 5], apex))
    rot = rotations_from_triangles(keep)
    graph = MaximalPlanarGraph(rot)
    colors = dict(gen.coloring)
    colors[apex] = VWHITE
    if len({colors[x] for x in cycle}) != 4:
        raise FourColorError("pentagon does not show all four colors")
    return BadExample(
        graph=graph, coloring=colors, apex=apex, pentagon=cycle
    )


def _edge_cycle(edges: List[FrozenSet[int]]) -> List[int]:
    adj: Dict[int, List[int]] = {}
    for e in edges:
        u, v = sorted(e)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if any(len(ns) != 2 for ns in adj.values()):
        raise FourColorError("hole boundary is not a single cycle")
    start = min(adj)
    cycle = [start]
    prev = None
    while True:
        cur = cycle[-1]
        nxt = next(x for x in adj[cur] if x != prev)
        if nxt == start:
            break
        cycle.append(nxt)
        prev = cur
    return cycle


# -- two-path decompositions -----------------------------------------------------


@dataclass
class TwoPathDecomposition:
    pairing: Tuple[Tuple[int, int], Tuple[int, int]]
    part1: List[int]
    part2: List[int]
    edges1: List[Tuple[int, int]]
    edges2: List[Tuple[int, int]]
    kinds: Tuple[str, str]  # "path" | "cycle" | "acyclic"

    @property
    def sizes(self) -> Tuple[int, int]:
        return (len(self.part1), len(self.part2))

    @property
    def edge_sizes(self) -> Tuple[int, int]:
        return (len(self.edges1), len(self.edges2))


def verify_two_path_decomposition(
    g: MaximalPlanarGraph, colors: Dict[int, int]
) -> Optional[TwoPathDecomposition]:
    """Check the three pair splits of a proper 4-coloring for two forests."""
    adj = g.adjacency()
    if not proper_vertex_coloring(adj, colors) or any(
        colors.get(v, VWHITE) == VWHITE for v in adj
    ):
        raise MalformedInstance("need a full proper 4-coloring")
    pairings = [
        ((R, B), (Y, G)),
        ((R, Y), (B, G)),
        ((R, G), (B, Y)),
    ]
    for p1, p2 in pairings:
        parts = []
        ok = True
        for pair in (p1, p2):
            members = sorted(v for v in adj if colors[v] in pair)
            edges = [
                (u, w)
                for u in members
                for w in adj[u]
                if w > u and colors[w] in pair
            ]
            if _has_cycle(members, edges):
                ok = False
                break
            parts.append((members, edges))
        if not ok:
            continue
        kinds = tuple(_subgraph_kind(*part) for part in parts)
        return TwoPathDecomposition(
            pairing=(p1, p2),
            part1=parts[0][0],
            part2=parts[1][0],
            edges1=parts[0][1],
            edges2=parts[1][1],
            kinds=kinds,  # type: ignore[arg-type]
        )
    return None


def _has_cycle(members, edges) -> bool:
    parent = {v: v for v in members}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return True
        parent[rv] = ru
    return False


def _subgraph_kind(members, edges) -> str:
    deg = {v: 0 for v in members}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    if all(d <= 2 for d in deg.values()) and len(edges) == len(members) - 1:
        if _connected_subgraph(members, edges):
            return "path"
    return "acyclic"


def _connected_subgraph(members, edges) -> bool:
    adj = {v: [] for v in members}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    if not members:
        return True
    seen = {members[0]}
    stack = [members[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(members)
