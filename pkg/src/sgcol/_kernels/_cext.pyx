# cython: language_level=3, boundscheck=False, wraparound=False
# cython: initializedcheck=False, cdivision=True
"""Compiled twins of the reference kernels in pure.py.

Same signatures, same outputs, same tie-breaking.  The DFS budget
fallback delegates to the layered routine in pure.py; it only runs on
overrun targets, which are rare by construction.
"""

import numpy as np

cimport numpy as cnp

from . import pure as _pure

cnp.import_array()

BACKEND_NAME = "cext"


def bfs_all_dists(object indptr_o, object nbr_o, int source):
    """Hop distances from source; -1 marks unreachable vertices."""
    cdef cnp.int32_t[::1] indptr = indptr_o
    cdef cnp.int32_t[::1] nbr = nbr_o
    cdef int n = indptr.shape[0] - 1
    dist_arr = np.full(n, -1, dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[::1] dist = dist_arr
    cdef cnp.int32_t[::1] queue = queue_arr
    cdef int head = 0, tail = 0, u, v, du
    cdef cnp.int64_t i
    dist[source] = 0
    queue[0] = source
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for i in range(indptr[u], indptr[u + 1]):
            v = nbr[i]
            if dist[v] < 0:
                dist[v] = du
                queue[tail] = v
                tail += 1
    return dist_arr


def exact_distance_pairs(object indptr_o, object nbr_o, object esign_o,
                         int k, int mode):
    """Vertex pairs (u < v) at distance exactly k, filtered by path signs.

    mode 0: unsigned, distance test only (esign ignored).
    mode 1: every length-k path negative.
    mode 2: some length-k path negative.
    """
    cdef cnp.int32_t[::1] indptr = indptr_o
    cdef cnp.int32_t[::1] nbr = nbr_o
    cdef cnp.int8_t[::1] esign
    if mode != 0:
        esign = esign_o
    cdef int n = indptr.shape[0] - 1
    out = []
    dist_arr = np.empty(n, dtype=np.int32)
    hasp_arr = np.empty(n, dtype=np.uint8)
    hasn_arr = np.empty(n, dtype=np.uint8)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[::1] dist = dist_arr
    cdef cnp.uint8_t[::1] hasp = hasp_arr
    cdef cnp.uint8_t[::1] hasn = hasn_arr
    cdef cnp.int32_t[::1] queue = queue_arr
    cdef int s, u, v, du, head, tail
    cdef cnp.int64_t i
    for s in range(n):
        dist_arr.fill(-1)
        hasp_arr.fill(0)
        hasn_arr.fill(0)
        dist[s] = 0
        hasp[s] = 1  # the empty path is positive
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u] + 1
            if du > k:
                break
            for i in range(indptr[u], indptr[u + 1]):
                v = nbr[i]
                if dist[v] < 0:
                    dist[v] = du
                    queue[tail] = v
                    tail += 1
                if dist[v] == du and mode != 0:
                    if esign[i] > 0:
                        hasp[v] |= hasp[u]
                        hasn[v] |= hasn[u]
                    else:
                        hasp[v] |= hasn[u]
                        hasn[v] |= hasp[u]
        for v in range(s + 1, n):
            if dist[v] != k:
                continue
            if mode == 0:
                out.append((s, v))
            elif mode == 1:
                if hasn[v] and not hasp[v]:
                    out.append((s, v))
            else:
                if hasn[v]:
                    out.append((s, v))
    return np.array(out, dtype=np.int32).reshape(len(out), 2)


def wreach_all(object indptr_o, object nbr_o, object pos_o, int k):
    """WReach_k sets for every vertex under the position labelling pos."""
    cdef cnp.int32_t[::1] indptr = indptr_o
    cdef cnp.int32_t[::1] nbr = nbr_o
    cdef cnp.int32_t[::1] pos = pos_o
    cdef int n = indptr.shape[0] - 1
    sets = [[] for _ in range(n)]
    seen_arr = np.full(n, -1, dtype=np.int32)
    front_arr = np.empty(n, dtype=np.int32)
    nxt_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[::1] seen = seen_arr
    cdef cnp.int32_t[::1] frontier = front_arr
    cdef cnp.int32_t[::1] nxt = nxt_arr
    cdef cnp.int32_t[::1] tmp
    cdef int x, px, fsize, nsize, fi, u, v, step
    cdef cnp.int64_t i
    for x in range(n):
        px = pos[x]
        seen[x] = x
        sets[x].append(x)
        fsize = 1
        frontier[0] = x
        for step in range(k):
            nsize = 0
            for fi in range(fsize):
                u = frontier[fi]
                for i in range(indptr[u], indptr[u + 1]):
                    v = nbr[i]
                    if seen[v] != x and pos[v] >= px:
                        seen[v] = x
                        sets[v].append(x)
                        nxt[nsize] = v
                        nsize += 1
            if nsize == 0:
                break
            tmp = frontier
            frontier = nxt
            nxt = tmp
            fsize = nsize
    return [np.array(s, dtype=np.int32) for s in sets]


def filtered_ball(object indptr_o, object nbr_o, object labels_o,
                  int min_label, int source, int depth):
    """Vertices within `depth` of source in the subgraph {labels >= min_label}."""
    cdef cnp.int32_t[::1] indptr = indptr_o
    cdef cnp.int32_t[::1] nbr = nbr_o
    cdef cnp.int32_t[::1] labels = labels_o
    assert labels[source] >= min_label
    cdef int n = indptr.shape[0] - 1
    dist_arr = np.full(n, -1, dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[::1] dist = dist_arr
    cdef cnp.int32_t[::1] queue = queue_arr
    cdef int head = 0, tail = 1, u, v, du
    cdef cnp.int64_t i
    dist[source] = 0
    queue[0] = source
    out = [source]
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        if du > depth:
            break
        for i in range(indptr[u], indptr[u + 1]):
            v = nbr[i]
            if dist[v] < 0 and labels[v] >= min_label:
                dist[v] = du
                out.append(v)
                queue[tail] = v
                tail += 1
    out.sort()
    return np.array(out, dtype=np.int32)


def dreach_all(object indptr_o, object nbr_o, object pos_o, int k,
               long long budget):
    """DReach_k sets for every vertex; see pure.dreach_all for the contract."""
    cdef cnp.int32_t[::1] indptr = indptr_o
    cdef cnp.int32_t[::1] nbr = nbr_o
    cdef cnp.int32_t[::1] pos = pos_o
    cdef int n = indptr.shape[0] - 1
    cdef int m = k // 2
    fallback_arr = np.zeros(n, dtype=np.uint8)
    on_path_arr = np.zeros(n, dtype=np.uint8)
    sv_arr = np.empty(k + 2, dtype=np.int64)
    sc_arr = np.empty(k + 2, dtype=np.int64)
    spm_arr = np.empty(k + 2, dtype=np.int64)
    sfs_arr = np.empty(k + 2, dtype=np.int64)
    cdef cnp.uint8_t[::1] fallback = fallback_arr
    cdef cnp.uint8_t[::1] on_path = on_path_arr
    cdef cnp.int64_t[::1] sv = sv_arr
    cdef cnp.int64_t[::1] sc = sc_arr
    cdef cnp.int64_t[::1] spm = spm_arr
    cdef cnp.int64_t[::1] sfs = sfs_arr
    cdef long long big = (<long long>1) << 60
    cdef long long py, pv, pm_cur, fs_cur, limit, ci, end, pushes
    cdef int y, u, v, t, top
    cdef bint advanced, overrun
    sets = []
    for y in range(n):
        py = pos[y]
        result = {y}
        pushes = 0
        overrun = False
        sv[0] = y
        sc[0] = indptr[y]
        spm[0] = big
        sfs[0] = big
        on_path[y] = 1
        top = 0
        pm_cur = py
        fs_cur = big
        while top >= 0:
            u = <int>sv[top]
            advanced = False
            if fs_cur < big:
                limit = fs_cur + m
                if limit > k:
                    limit = k
            else:
                limit = k
            if top < limit:
                ci = sc[top]
                end = indptr[u + 1]
                while ci < end:
                    v = nbr[ci]
                    ci += 1
                    if on_path[v]:
                        continue
                    pushes += 1
                    if pushes > budget:
                        overrun = True
                        break
                    t = top + 1
                    pv = pos[v]
                    if pv < pm_cur and fs_cur >= t - m:
                        result.add(v)
                    sc[top] = ci
                    sv[t] = v
                    sc[t] = indptr[v]
                    spm[t] = pm_cur
                    sfs[t] = fs_cur
                    if pv < pm_cur:
                        pm_cur = pv
                    if pv < py and t < fs_cur:
                        fs_cur = t
                    on_path[v] = 1
                    top = t
                    advanced = True
                    break
                if not advanced:
                    sc[top] = ci
            if overrun:
                break
            if not advanced:
                on_path[u] = 0
                pm_cur = spm[top]
                fs_cur = sfs[top]
                top -= 1
        if overrun:
            while top >= 0:
                on_path[<int>sv[top]] = 0
                top -= 1
            fallback[y] = 1
            result = _pure._dreach_one_layered(indptr_o, nbr_o, pos_o, k, y)
        sets.append(np.array(sorted(int(x) for x in result), dtype=np.int32))
    return sets, fallback_arr
