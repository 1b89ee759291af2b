# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; contract identical to fourcolor._pykernels."""

from libc.stdlib cimport free, malloc

BACKEND = "cython"


cdef struct Csr:
    int n
    int *off
    int *nbr


cdef Csr _build(int n, offsets, neighbors) except *:
    cdef Csr g
    g.n = n
    g.off = <int *> malloc((n + 1) * sizeof(int))
    g.nbr = <int *> malloc(len(neighbors) * sizeof(int))
    if g.off == NULL or g.nbr == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n + 1):
        g.off[i] = offsets[i]
    for i in range(len(neighbors)):
        g.nbr[i] = neighbors[i]
    return g


cdef void _release(Csr g) noexcept:
    free(g.off)
    free(g.nbr)


def kcolor_first(int n, offsets, neighbors, int k, int symmetry_cap=3):
    if n == 0:
        return []
    cdef Csr g = _build(n, offsets, neighbors)
    cdef int *colors = <int *> malloc(n * sizeof(int))
    cdef int v = 0, c, cap, i, w, ok, placed
    try:
        for i in range(n):
            colors[i] = 0
        while True:
            cap = k
            if v < symmetry_cap and v + 1 < k:
                cap = v + 1
            c = colors[v] + 1
            placed = 0
            while c <= cap:
                ok = 1
                for i in range(g.off[v], g.off[v + 1]):
                    w = g.nbr[i]
                    if w < v and colors[w] == c:
                        ok = 0
                        break
                if ok:
                    colors[v] = c
                    placed = 1
                    break
                c += 1
            if placed:
                if v == n - 1:
                    return [colors[i] for i in range(n)]
                v += 1
            else:
                colors[v] = 0
                v -= 1
                if v < 0:
                    return None
    finally:
        free(colors)
        _release(g)


def equitable_first(int n, offsets, neighbors):
    if n == 0:
        return []
    cdef Csr g = _build(n, offsets, neighbors)
    cdef int *colors = <int *> malloc(n * sizeof(int))
    cdef int counts[5]
    cdef int sizes[4]
    cdef int v = 0, c, cap, i, w, ok, placed, t, tmp
    try:
        for i in range(n):
            colors[i] = 0
        for i in range(5):
            counts[i] = 0
        while True:
            cap = 4
            if v < 3 and v + 1 < 4:
                cap = v + 1
            if colors[v] != 0:
                counts[colors[v]] -= 1
            c = colors[v] + 1
            placed = 0
            while c <= cap:
                ok = 1
                for i in range(g.off[v], g.off[v + 1]):
                    w = g.nbr[i]
                    if w < v and colors[w] == c:
                        ok = 0
                        break
                if ok:
                    colors[v] = c
                    counts[c] += 1
                    placed = 1
                    break
                c += 1
            if placed:
                if v == n - 1:
                    for i in range(4):
                        sizes[i] = counts[i + 1]
                    for i in range(3):
                        for t in range(3 - i):
                            if sizes[t] > sizes[t + 1]:
                                tmp = sizes[t]
                                sizes[t] = sizes[t + 1]
                                sizes[t + 1] = tmp
                    if sizes[2] - sizes[0] <= 1 or sizes[3] - sizes[1] <= 1:
                        return [colors[i] for i in range(n)]
                    continue
                v += 1
            else:
                colors[v] = 0
                v -= 1
                if v < 0:
                    return None
    finally:
        free(colors)
        _release(g)


def hamiltonian_cycle(int n, offsets, neighbors, long node_budget=0):
    if n < 3:
        return 0, None
    cdef Csr g = _build(n, offsets, neighbors)
    cdef int *used = <int *> malloc(n * sizeof(int))
    cdef int *cnt = <int *> malloc(n * sizeof(int))
    cdef int *adj0 = <int *> malloc(n * sizeof(int))
    cdef int *path = <int *> malloc((n + 1) * sizeof(int))
    cdef int *choice = <int *> malloc((n + 1) * sizeof(int))
    cdef long nodes = 0
    cdef int depth, u, w, x, i, j, ok, status
    try:
        for i in range(n):
            used[i] = 0
            cnt[i] = g.off[i + 1] - g.off[i]
            adj0[i] = 0
        for i in range(g.off[0], g.off[1]):
            adj0[g.nbr[i]] = 1
        used[0] = 1
        for i in range(g.off[0], g.off[1]):
            cnt[g.nbr[i]] -= 1
        path[0] = 0
        depth = 0
        choice[0] = g.off[0]
        status = 0
        # Iterative DFS: choice[d] is the next neighbor index to try at
        # depth d (path[d] is the vertex there).
        while depth >= 0:
            u = path[depth]
            if depth == n - 1:
                if adj0[u] and path[1] < u:
                    status = 1
                    break
                # fall through to backtrack
                choice[depth] = g.off[u + 1]
            if choice[depth] >= g.off[u + 1]:
                # backtrack
                depth -= 1
                if depth < 0:
                    break
                w = path[depth + 1]
                for i in range(g.off[w], g.off[w + 1]):
                    x = g.nbr[i]
                    if not used[x]:
                        cnt[x] += 1
                used[w] = 0
                continue
            w = g.nbr[choice[depth]]
            choice[depth] += 1
            if used[w]:
                continue
            nodes += 1
            if node_budget and nodes > node_budget:
                status = -1
                break
            used[w] = 1
            path[depth + 1] = w
            for i in range(g.off[w], g.off[w + 1]):
                x = g.nbr[i]
                if not used[x]:
                    cnt[x] -= 1
            ok = 1
            for x in range(n):
                if used[x]:
                    continue
                if cnt[x] + adj0[x] >= 2:
                    continue
                # x may still be served by the path head w
                for j in range(g.off[w], g.off[w + 1]):
                    if g.nbr[j] == x:
                        break
                else:
                    ok = 0
                    break
            if ok:
                depth += 1
                choice[depth] = g.off[w]
            else:
                for i in range(g.off[w], g.off[w + 1]):
                    x = g.nbr[i]
                    if not used[x]:
                        cnt[x] += 1
                used[w] = 0
        if status == 1:
            return 1, [path[i] for i in range(n)]
        return status, None
    finally:
        free(used)
        free(cnt)
        free(adj0)
        free(path)
        free(choice)
        _release(g)


def strong_first(int n, offsets, neighbors, long node_budget=0):
    if n == 0:
        return 0, None
    cdef Csr g = _build(n, offsets, neighbors)
    cdef int *order = <int *> malloc(n * sizeof(int))
    cdef int *rankpos = <int *> malloc(n * sizeof(int))
    cdef int *colors = <int *> malloc(n * sizeof(int))
    cdef int *p0 = <int *> malloc(n * sizeof(int))
    cdef int *p1 = <int *> malloc(n * sizeof(int))
    cdef int *choice = <int *> malloc((n + 1) * sizeof(int))
    # undo log: per depth, saved union roots (at most deg entries)
    cdef int *undo_root = <int *> malloc(16 * n * sizeof(int))
    cdef int *undo_pair = <int *> malloc(16 * n * sizeof(int))
    cdef int *undo_len = <int *> malloc((n + 1) * sizeof(int))
    cdef int *seen34 = <int *> malloc((n + 1) * sizeof(int))
    cdef long nodes = 0
    cdef int qhead = 0, qtail = 0, i, u, w, v, c, depth, ra, rb, cyc, status
    cdef int undo_top = 0, pairix
    try:
        for i in range(n):
            colors[i] = 0
            p0[i] = i
            p1[i] = i
            rankpos[i] = -1
        # BFS order from 0
        order[0] = 0
        rankpos[0] = 0
        qtail = 1
        while qhead < qtail:
            u = order[qhead]
            qhead += 1
            for i in range(g.off[u], g.off[u + 1]):
                w = g.nbr[i]
                if rankpos[w] < 0:
                    rankpos[w] = qtail
                    order[qtail] = w
                    qtail += 1
        for i in range(n):
            if rankpos[i] < 0:
                order[qtail] = i
                rankpos[i] = qtail
                qtail += 1

        status = 0
        depth = 0
        choice[0] = 0
        undo_len[0] = 0
        seen34[0] = 0
        while depth >= 0:
            if depth == n:
                if _strong_ok(&g, colors):
                    status = 1
                    break
                depth -= 1
                _undo(depth, undo_len, undo_root, undo_pair, p0, p1, &undo_top)
                colors[order[depth]] = 0
                continue
            v = order[depth]
            c = choice[depth] + 1
            if c > 4 or (depth == 0 and c > 1):
                depth -= 1
                if depth < 0:
                    break
                _undo(depth, undo_len, undo_root, undo_pair, p0, p1, &undo_top)
                colors[order[depth]] = 0
                continue
            choice[depth] = c
            if c == 4 and not seen34[depth]:
                continue
            nodes += 1
            if node_budget and nodes > node_budget:
                status = -1
                break
            cyc = 0
            for i in range(g.off[v], g.off[v + 1]):
                if colors[g.nbr[i]] == c:
                    cyc = 1
                    break
            if cyc:
                continue
            # forest check with undo
            undo_len[depth] = 0
            cyc = 0
            for i in range(g.off[v], g.off[v + 1]):
                w = g.nbr[i]
                if colors[w] == 0:
                    continue
                if (colors[w] <= 2) != (c <= 2):
                    continue
                if c <= 2:
                    ra = _find(p0, v)
                    rb = _find(p0, w)
                else:
                    ra = _find(p1, v)
                    rb = _find(p1, w)
                if ra == rb:
                    cyc = 1
                    break
                if c <= 2:
                    p0[rb] = ra
                    pairix = 0
                else:
                    p1[rb] = ra
                    pairix = 1
                undo_root[undo_top] = rb
                undo_pair[undo_top] = pairix
                undo_top += 1
                undo_len[depth] += 1
            if cyc:
                _undo(depth, undo_len, undo_root, undo_pair, p0, p1, &undo_top)
                continue
            colors[v] = c
            depth += 1
            choice[depth] = 0
            undo_len[depth] = 0
            seen34[depth] = seen34[depth - 1] or (c >= 3)
        if status == 1:
            return 1, [colors[i] for i in range(n)]
        return status, None
    finally:
        free(order)
        free(rankpos)
        free(colors)
        free(p0)
        free(p1)
        free(choice)
        free(undo_root)
        free(undo_pair)
        free(undo_len)
        free(seen34)
        _release(g)


cdef inline int _find(int *p, int x) noexcept:
    while p[x] != x:
        x = p[x]
    return x


cdef inline void _undo(int depth, int *undo_len, int *undo_root,
                       int *undo_pair, int *p0, int *p1,
                       int *undo_top) noexcept:
    cdef int t
    for t in range(undo_len[depth]):
        undo_top[0] -= 1
        if undo_pair[undo_top[0]] == 0:
            p0[undo_root[undo_top[0]]] = undo_root[undo_top[0]]
        else:
            p1[undo_root[undo_top[0]]] = undo_root[undo_top[0]]
    undo_len[depth] = 0


cdef int _strong_ok(Csr *g, int *colors) noexcept:
    cdef int n = g.n
    cdef int lo, hi, first, count, reach, i, u, w
    cdef int *stack = <int *> malloc(n * sizeof(int))
    cdef int *seen = <int *> malloc(n * sizeof(int))
    cdef int top
    if stack == NULL or seen == NULL:
        free(stack)
        free(seen)
        return 0
    cdef int pair
    for pair in range(2):
        lo = 1 if pair == 0 else 3
        hi = 2 if pair == 0 else 4
        first = -1
        count = 0
        for i in range(n):
            seen[i] = 0
            if lo <= colors[i] <= hi:
                count += 1
                if first < 0:
                    first = i
        if count == 0:
            free(stack)
            free(seen)
            return 0
        seen[first] = 1
        reach = 1
        stack[0] = first
        top = 1
        while top:
            top -= 1
            u = stack[top]
            for i in range(g.off[u], g.off[u + 1]):
                w = g.nbr[i]
                if lo <= colors[w] <= hi and not seen[w]:
                    seen[w] = 1
                    reach += 1
                    stack[top] = w
                    top += 1
        if reach != count:
            free(stack)
            free(seen)
            return 0
    free(stack)
    free(seen)
    return 1
