"""Exact ground-truth engines, independent of the heuristic pipeline."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .coloring import WHITE
from .errors import BudgetExhausted, ImproperColoring, TooLarge
from .kernels import (
    equitable_first,
    hamiltonian_cycle,
    kcolor_first,
    strong_first,
    to_csr,
)
from .normal_map import NormalMap

Adjacency = Sequence[Sequence[int]]


def backtrack_four_color(adjacency) -> Optional[List[int]]:
    """First proper 4-coloring in deterministic order, or None.

    Color-permutation symmetry is broken on the first three vertices.
    """
    n, offsets, neighbors, index = to_csr(adjacency)
    found = kcolor_first(n, offsets, neighbors, 4)
    return found


def kcolorable(adjacency, k: int) -> bool:
    n, offsets, neighbors, _ = to_csr(adjacency)
    return kcolor_first(n, offsets, neighbors, k) is not None


def verify_proper(adjacency, coloring: Sequence[int]) -> bool:
    """True iff nothing is white and no edge is monochromatic."""
    if isinstance(adjacency, dict):
        items = adjacency.items()
        getcolor = lambda v: coloring[v]  # noqa: E731
    else:
        items = enumerate(adjacency)
        getcolor = lambda v: coloring[v]  # noqa: E731
    for v, nbrs in items:
        cv = getcolor(v)
        if cv == WHITE:
            return False
        for w in nbrs:
            if getcolor(w) == cv and w != v:
                return False
    return True


@dataclass
class Decomposition2Bipartite:
    h1: List[Tuple[int, int]]
    h2: List[Tuple[int, int]]


def bipartite_decomposition(
    adjacency, coloring: Sequence[int], pairing: Tuple[Tuple[int, int], Tuple[int, int]] = ((1, 2), (3, 4))
) -> Decomposition2Bipartite:
    """Split the edges into two bipartite graphs from a proper 4-coloring.

    H1 keeps edges inside the two pair classes, H2 the edges across; both
    parts are re-validated by an independent 2-coloring check.
    """
    if not verify_proper(adjacency, coloring):
        raise ImproperColoring("need a proper 4-coloring")
    (a1, a2), (b1, b2) = pairing
    edges = _edge_list(adjacency)
    h1, h2 = [], []
    for u, v in edges:
        cu, cv = coloring[u], coloring[v]
        if {cu, cv} <= {a1, a2} or {cu, cv} <= {b1, b2}:
            h1.append((u, v))
        else:
            h2.append((u, v))
    for part in (h1, h2):
        if not _is_bipartite(part):
            raise ImproperColoring("decomposition part is not bipartite")
    return Decomposition2Bipartite(h1=h1, h2=h2)


def _edge_list(adjacency):
    if isinstance(adjacency, dict):
        return sorted(
            {(min(u, v), max(u, v)) for u, ns in adjacency.items() for v in ns}
        )
    return sorted(
        {
            (min(u, v), max(u, v))
            for u, ns in enumerate(adjacency)
            for v in ns
        }
    )


def _is_bipartite(edges: List[Tuple[int, int]]) -> bool:
    adj: Dict[int, List[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    side: Dict[int, int] = {}
    for root in sorted(adj):
        if root in side:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in side:
                    side[w] = side[u] ^ 1
                    stack.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def equitable_claim_search(adjacency, restarts: int = 0) -> Optional[List[int]]:
    """Proper 4-coloring with at least three class sizes within one.

    Exhaustive (symmetry-reduced) search; None is a proven verdict.
    ``restarts`` is accepted for API compatibility with heuristic use on
    large instances but the search is already exact at desk scale.
    """
    n, offsets, neighbors, _ = to_csr(adjacency)
    return equitable_first(n, offsets, neighbors)


@dataclass
class StrongColoringWitness:
    coloring: List[int]
    tree_a: List[Tuple[int, int]]  # region adjacencies of classes {1,2}
    tree_b: List[Tuple[int, int]]  # region adjacencies of classes {3,4}


def strong_coloring_search(
    m: NormalMap, node_budget: int = 50_000_000
) -> Optional[StrongColoringWitness]:
    """Search for a 4-coloring splitting the regions into two Kempe trees.

    A Hamiltonian cycle of the map's cubic graph yields a witness directly
    (the regions on either side of the cycle form trees), so that fast path
    runs first; otherwise the exhaustive pruned enumeration decides.  Raises
    BudgetExhausted when the enumeration is cut off, which is distinct from
    a proven None.
    """
    cycle = _hamiltonian_cycle_of_map(m, node_budget=2_000_000)
    if cycle is not None:
        witness = _witness_from_cycle(m, cycle)
        if witness is not None:
            return witness
    adj = m.dual_adjacency()
    n, offsets, neighbors, _ = to_csr(adj)
    status, colors = strong_first(n, offsets, neighbors, node_budget)
    if status == -1:
        raise BudgetExhausted("strong-coloring enumeration budget exhausted")
    if status == 0:
        return None
    return _make_witness(m, colors)


def _hamiltonian_cycle_of_map(m: NormalMap, node_budget: int):
    adj = m.embedding.adjacency()
    n, offsets, neighbors, index = to_csr(adj)
    status, cycle = hamiltonian_cycle(n, offsets, neighbors, node_budget)
    if status != 1:
        return None
    back = {i: v for v, i in index.items()}
    return [back[i] for i in cycle]


def _witness_from_cycle(m: NormalMap, cycle: List[int]) -> Optional[StrongColoringWitness]:
    on_cycle = set()
    k = len(cycle)
    emb = m.embedding
    pair_index = {}
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        on_cycle.add((u, v))
        on_cycle.add((v, u))
    cycle_edges = set()
    for e in emb.edges:
        u, v = emb.endpoints(e)
        if (u, v) in on_cycle:
            cycle_edges.add(e)
    # Regions on the same side stay connected through non-cycle borders.
    side = [-1] * m.face_count
    comp_id = 0
    for f in range(m.face_count):
        if side[f] >= 0:
            continue
        side[f] = comp_id
        stack = [f]
        while stack:
            a = stack.pop()
            for g in m.face_neighbors(a):
                if side[g] >= 0:
                    continue
                if all(e in cycle_edges for e in m.border_edges(a, g)):
                    continue
                side[g] = comp_id
                stack.append(g)
        comp_id += 1
    if comp_id != 2:
        return None
    colors = [0] * m.face_count
    for part, base in ((0, 1), (1, 3)):
        members = [f for f in range(m.face_count) if side[f] == part]
        seen = {members[0]}
        colors[members[0]] = base
        queue = [members[0]]
        while queue:
            a = queue.pop(0)
            for g in m.face_neighbors(a):
                if side[g] == part and g not in seen:
                    seen.add(g)
                    colors[g] = base + 1 if colors[a] == base else base
                    queue.append(g)
        if len(seen) != len(members):
            return None
    witness = _make_witness(m, colors)
    if witness is None:
        return None
    return witness


def _make_witness(m: NormalMap, colors: Sequence[int]) -> Optional[StrongColoringWitness]:
    if not verify_proper(m.dual_adjacency(), colors):
        return None
    trees = []
    for lo, hi in ((1, 2), (3, 4)):
        members = [f for f in range(m.face_count) if lo <= colors[f] <= hi]
        if not members:
            return None
        edges = [
            (f, g)
            for f in members
            for g in m.face_neighbors(f)
            if g > f and lo <= colors[g] <= hi
        ]
        if len(edges) != len(members) - 1:
            return None
        if not _connected(members, edges):
            return None
        trees.append(edges)
    return StrongColoringWitness(
        coloring=list(colors), tree_a=trees[0], tree_b=trees[1]
    )


def _connected(members: List[int], edges: List[Tuple[int, int]]) -> bool:
    adj: Dict[int, List[int]] = {v: [] for v in members}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {members[0]}
    stack = [members[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(members)


def is_hamiltonian(adjacency, bound: int = 60) -> bool:
    """Exact Hamiltonicity verdict for a connected cubic graph."""
    n, offsets, neighbors, _ = to_csr(adjacency)
    if n > bound:
        raise TooLarge(f"{n} vertices exceeds the exact-search bound {bound}")
    status, _ = hamiltonian_cycle(n, offsets, neighbors, 0)
    return status == 1


def three_colorable_by_heawood(m: NormalMap) -> bool:
    """True iff every region has an even number of sides.

    Heawood's criterion for cubic maps; the brute-force cross-check lives
    in the oracle tests rather than here.
    """
    return all(m.face_size(f) % 2 == 0 for f in range(m.face_count))


def brute_force_three_colorable(m: NormalMap) -> bool:
    return kcolorable(m.dual_adjacency(), 3)
