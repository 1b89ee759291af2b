"""Pure-Python search kernels.

Same contract as the compiled module ``fourcolor._ckernels``; the active
implementation is chosen in :mod:`fourcolor.kernels`.  All searches run in
a fixed deterministic order so both backends return identical results.

Graphs arrive in CSR form: ``n`` vertices, ``offsets`` of length n+1 and a
flat ``neighbors`` list, vertices labeled 0..n-1.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

BACKEND = "python"


def kcolor_first(
    n: int, offsets, neighbors, k: int, symmetry_cap: int = 3
) -> Optional[List[int]]:
    """First proper k-coloring in lexicographic order, or None.

    The first ``symmetry_cap`` vertices have their color choices capped at
    position+1 to break color-permutation symmetry.
    """
    if n == 0:
        return []
    colors = [0] * n
    v = 0
    while True:
        cap = k if v >= symmetry_cap else min(k, v + 1)
        c = colors[v] + 1
        placed = False
        while c <= cap:
            ok = True
            for i in range(offsets[v], offsets[v + 1]):
                w = neighbors[i]
                if w < v and colors[w] == c:
                    ok = False
                    break
            if ok:
                colors[v] = c
                placed = True
                break
            c += 1
        if placed:
            if v == n - 1:
                return colors
            v += 1
        else:
            colors[v] = 0
            v -= 1
            if v < 0:
                return None


def equitable_first(n: int, offsets, neighbors) -> Optional[List[int]]:
    """First proper 4-coloring with at least three class sizes pairwise
    within one; None only after exhausting the (symmetry-reduced) search."""
    if n == 0:
        return []
    colors = [0] * n
    counts = [0, 0, 0, 0, 0]
    v = 0
    while True:
        cap = 4 if v >= 3 else min(4, v + 1)
        if colors[v] != 0:
            counts[colors[v]] -= 1
        c = colors[v] + 1
        placed = False
        while c <= cap:
            ok = True
            for i in range(offsets[v], offsets[v + 1]):
                w = neighbors[i]
                if w < v and colors[w] == c:
                    ok = False
                    break
            if ok:
                colors[v] = c
                counts[c] += 1
                placed = True
                break
            c += 1
        if placed:
            if v == n - 1:
                s = sorted(counts[1:])
                if s[2] - s[0] <= 1 or s[3] - s[1] <= 1:
                    return colors
                continue  # retry last vertex with its next color
            v += 1
        else:
            colors[v] = 0
            v -= 1
            if v < 0:
                return None


def hamiltonian_cycle(
    n: int, offsets, neighbors, node_budget: int = 0
) -> Tuple[int, Optional[List[int]]]:
    """Exact Hamiltonian-cycle search anchored at vertex 0.

    Returns (status, cycle): status 1 = found, 0 = proven none, -1 = node
    budget exhausted (only possible when ``node_budget`` > 0).

    Prune rule: an unused vertex x must keep at least two usable cycle
    connections, counting unused neighbors, vertex 0 (the eventual closing
    endpoint) and the current path head.
    """
    if n < 3:
        return 0, None
    adj = [list(neighbors[offsets[v] : offsets[v + 1]]) for v in range(n)]
    adjset = [set(a) for a in adj]
    adj0 = [1 if 0 in adjset[v] else 0 for v in range(n)]
    used = [False] * n
    used[0] = True
    cnt = [len(adj[v]) for v in range(n)]
    for w in adj[0]:
        cnt[w] -= 1
    path = [0]
    unused = set(range(1, n))
    nodes = 0

    def feasible(head: int) -> bool:
        for x in unused:
            if cnt[x] + adj0[x] + (1 if x in adjset[head] else 0) < 2:
                return False
        return True

    def extend(u: int) -> int:
        nonlocal nodes
        nodes += 1
        if node_budget and nodes > node_budget:
            return -1
        if not unused:
            return 1 if adj0[u] and path[1] < u else 0
        for w in adj[u]:
            if used[w]:
                continue
            used[w] = True
            unused.discard(w)
            path.append(w)
            for x in adj[w]:
                if not used[x]:
                    cnt[x] -= 1
            r = 0
            if feasible(w):
                r = extend(w)
            for x in adj[w]:
                if not used[x]:
                    cnt[x] += 1
            used[w] = False
            unused.add(w)
            if r == 1:
                return 1
            path.pop()
            if r == -1:
                return -1
        return 0

    r = extend(0)
    if r == 1:
        return 1, list(path)
    return r, None


def strong_first(
    n: int, offsets, neighbors, node_budget: int = 0
) -> Tuple[int, Optional[List[int]]]:
    """First proper 4-coloring whose classes {1,2} and {3,4} each induce a
    tree (connected and acyclic), with exhaustive forest-pruned enumeration.

    Returns (status, colors): 1 found, 0 proven none, -1 budget exhausted.
    Vertices are searched in BFS order; color symmetry within and between
    the two pairs is broken canonically (vertex order[0] gets color 1, the
    first {3,4} vertex gets color 3).
    """
    if n == 0:
        return 0, None
    adj = [list(neighbors[offsets[v] : offsets[v + 1]]) for v in range(n)]
    order: List[int] = []
    seen = [False] * n
    queue = [0]
    seen[0] = True
    while queue:
        u = queue.pop(0)
        order.append(u)
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    for v in range(n):
        if not seen[v]:
            order.append(v)

    colors = [0] * n
    parents = [list(range(n)), list(range(n))]
    nodes = 0
    witness: List[Optional[List[int]]] = [None]

    def find(p: List[int], x: int) -> int:
        while p[x] != x:
            x = p[x]
        return x

    def assign(i: int, pair34_open: bool) -> int:
        nonlocal nodes
        nodes += 1
        if node_budget and nodes > node_budget:
            return -1
        if i == n:
            if _strong_connected(n, adj, colors):
                witness[0] = list(colors)
                return 1
            return 0
        v = order[i]
        for c in (1, 2, 3, 4):
            if i == 0 and c != 1:
                break
            if c == 4 and pair34_open:
                continue
            ok = True
            for w in adj[v]:
                if colors[w] == c:
                    ok = False
                    break
            if not ok:
                continue
            p = parents[0 if c <= 2 else 1]
            saved = []
            cyc = False
            for w in adj[v]:
                cw = colors[w]
                if cw != 0 and (cw <= 2) == (c <= 2):
                    ra, rb = find(p, v), find(p, w)
                    if ra == rb:
                        cyc = True
                        break
                    saved.append(rb)
                    p[rb] = ra
            if cyc:
                for x in reversed(saved):
                    p[x] = x
                continue
            colors[v] = c
            r = assign(i + 1, pair34_open and c <= 2)
            colors[v] = 0
            for x in reversed(saved):
                p[x] = x
            if r != 0:
                return r
        return 0

    r = assign(0, True)
    return r, witness[0]


def _strong_connected(n, adj, colors) -> bool:
    for lo, hi in ((1, 2), (3, 4)):
        members = [v for v in range(n) if lo <= colors[v] <= hi]
        if not members:
            return False
        reach = {members[0]}
        stack = [members[0]]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if lo <= colors[w] <= hi and w not in reach:
                    reach.add(w)
                    stack.append(w)
        if len(reach) != len(members):
            return False
    return True
