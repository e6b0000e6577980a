"""Pure-Python reference kernels.

Each function here has a compiled twin in _cext; the package selects one
backend at import time and the test suite pins them to identical output.
All kernels speak plain arrays (CSR adjacency, int32 position labels) so
that both backends share call sites.

CSR layout: neighbours of v are nbr[indptr[v]:indptr[v+1]], sorted
ascending; esign carries the matching edge signs for signed graphs.
"""

from collections import deque

import numpy as np

BACKEND_NAME = "pure"


def bfs_all_dists(indptr, nbr, source):
    """Hop distances from source; -1 marks unreachable vertices."""
    n = len(indptr) - 1
    dist = np.full(n, -1, dtype=np.int32)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for i in range(indptr[u], indptr[u + 1]):
            v = nbr[i]
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def exact_distance_pairs(indptr, nbr, esign, k, mode):
    """Vertex pairs (u < v) at distance exactly k, filtered by path signs.

    mode 0: unsigned, distance test only (esign ignored).
    mode 1: every length-k path negative.
    mode 2: some length-k path negative.

    Per source: BFS capped at depth k, propagating has-positive /
    has-negative flags along BFS DAG edges.  A vertex at layer d+1
    collects flags from every layer-d neighbour, flipped when the
    connecting edge is negative.  Flags over shortest paths only.
    """
    n = len(indptr) - 1
    out = []
    dist = np.empty(n, dtype=np.int32)
    hasp = np.empty(n, dtype=np.uint8)
    hasn = np.empty(n, dtype=np.uint8)
    for s in range(n):
        dist.fill(-1)
        hasp.fill(0)
        hasn.fill(0)
        dist[s] = 0
        hasp[s] = 1  # the empty path is positive
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            if du > k:
                break
            for i in range(indptr[u], indptr[u + 1]):
                v = nbr[i]
                if dist[v] < 0:
                    dist[v] = du
                    queue.append(v)
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


def wreach_all(indptr, nbr, pos, k):
    """WReach_k sets for every vertex under the position labelling pos.

    For each x in id order, a depth-k BFS inside {z : pos[z] >= pos[x]}
    appends x to the set of every vertex reached, so each output array
    is sorted ascending by id.
    """
    n = len(indptr) - 1
    sets = [[] for _ in range(n)]
    seen = np.full(n, -1, dtype=np.int32)
    frontier = np.empty(n, dtype=np.int32)
    nxt = np.empty(n, dtype=np.int32)
    for x in range(n):
        px = pos[x]
        seen[x] = x
        sets[x].append(x)
        fsize = 1
        frontier[0] = x
        for _ in range(k):
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
            frontier, nxt = nxt, frontier
            fsize = nsize
    return [np.array(s, dtype=np.int32) for s in sets]


def filtered_ball(indptr, nbr, labels, min_label, source, depth):
    """Vertices within `depth` of source in the subgraph {labels >= min_label}.

    The source must satisfy the label bound itself.  Returned sorted
    ascending, source included.
    """
    assert labels[source] >= min_label
    n = len(indptr) - 1
    dist = np.full(n, -1, dtype=np.int32)
    dist[source] = 0
    queue = deque([source])
    out = [source]
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        if du > depth:
            break
        for i in range(indptr[u], indptr[u + 1]):
            v = nbr[i]
            if dist[v] < 0 and labels[v] >= min_label:
                dist[v] = du
                out.append(v)
                queue.append(v)
    out.sort()
    return np.array(out, dtype=np.int32)


def dreach_all(indptr, nbr, pos, k, budget):
    """DReach_k sets for every vertex by bounded-depth path enumeration.

    From each target y, a DFS enumerates simple paths y = w_0, ..., w_t
    backwards (so w_t plays the role of the path start x).  Position
    constraints translate as follows, with m = k // 2:

      * w_t enters the set when pos[w_t] < pos[w_j] for all j < t and
        every w_j with j <= t - m - 1 satisfies pos[w_j] >= pos[y];
      * once some interior w_i (i >= 1) has pos[w_i] < pos[y], any
        recordable extension has total length at most i + m, which
        caps the DFS depth.

    Neighbours are expanded in ascending id order.  Each target has a
    work budget (vertex pushes); on overrun the target is recomputed by
    the exact layered routine and flagged in the second return value,
    never silently truncated.
    """
    n = len(indptr) - 1
    m = k // 2
    fallback = np.zeros(n, dtype=np.uint8)
    sets = []
    on_path = np.zeros(n, dtype=np.uint8)
    # explicit DFS stack: vertex, neighbour cursor, and the prefix
    # position-minimum / first-small-index values to restore on pop
    sv = [0] * (k + 2)
    sc = [0] * (k + 2)
    spm = [0] * (k + 2)
    sfs = [0] * (k + 2)
    big = 1 << 60
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
        pm_cur = py        # min position over the whole current stack
        fs_cur = big       # least index i >= 1 with pos[w_i] < pos[y]
        while top >= 0:
            u = sv[top]
            advanced = False
            limit = min(k, fs_cur + m) if fs_cur < big else k
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
                        result.add(int(v))
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
                on_path[sv[top]] = 0
                top -= 1
            fallback[y] = 1
            result = _dreach_one_layered(indptr, nbr, pos, k, y)
        sets.append(np.array(sorted(int(x) for x in result), dtype=np.int32))
    return sets, fallback


def _dreach_one_layered(indptr, nbr, pos, k, y):
    """Exact DReach_k[y] without enumeration.

    Walk form: a qualifying path splits at index m = k // 2 into a
    length-m prefix from x inside {pos >= pos[x]} and a tail whose
    vertices beyond index m all satisfy pos >= pos[y].  Shortcutting a
    walk only lowers indices, so walk reachability equals path
    reachability on both halves.
    """
    m = k // 2
    tail_r = k - m - 1
    py = pos[y]
    result = {y}
    # S: vertices adjacent to the constrained tail zone around y
    ball = filtered_ball(indptr, nbr, pos, py, y, tail_r)
    s_set = set()
    for t in ball.tolist():
        for i in range(indptr[t], indptr[t + 1]):
            s_set.add(int(nbr[i]))
    # candidates: x below y within k hops (unrestricted ball is a superset)
    cand = _plain_ball(indptr, nbr, y, k)
    for x in cand:
        if pos[x] >= py:
            continue
        reach, exact = _prefix_reach(indptr, nbr, pos, x, m)
        if y in reach:
            result.add(x)
            continue
        if not exact.isdisjoint(s_set):
            result.add(x)
    return result


def _plain_ball(indptr, nbr, source, depth):
    n = len(indptr) - 1
    dist = np.full(n, -1, dtype=np.int32)
    dist[source] = 0
    queue = deque([source])
    out = [source]
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        if du > depth:
            break
        for i in range(indptr[u], indptr[u + 1]):
            v = nbr[i]
            if dist[v] < 0:
                dist[v] = du
                out.append(v)
                queue.append(v)
    return out


def _prefix_reach(indptr, nbr, pos, x, m):
    """(ball within m hops, exact-length-m walk set) from x in {pos >= pos[x]}."""
    px = pos[x]
    reach = {x}
    layer = {x}
    for _ in range(m):
        nxt = set()
        for u in layer:
            for i in range(indptr[u], indptr[u + 1]):
                v = int(nbr[i])
                if pos[v] >= px:
                    nxt.add(v)
        layer = nxt
        reach |= layer
    return reach, layer


def dreach_all_layered(indptr, nbr, pos, k):
    """Exact DReach_k sets for every vertex via the layered split.

    One pass over prefix starts x builds (a) WReach_m membership and
    (b) an inverted index of the exact-length-m walk sets; a pass over
    targets y intersects with the tail zone.  Used to cross-check the
    enumeration kernel and as its overrun fallback at full-graph scale.
    """
    n = len(indptr) - 1
    m = k // 2
    tail_r = k - m - 1
    wreach_m = [[] for _ in range(n)]
    inv = [[] for _ in range(n)]
    for x in range(n):
        reach, layer = _prefix_reach(indptr, nbr, pos, x, m)
        for u in reach:
            wreach_m[u].append(x)
        for u in layer:
            inv[u].append(x)
    sets = []
    for y in range(n):
        py = pos[y]
        result = set(wreach_m[y])
        result.add(y)
        ball = filtered_ball(indptr, nbr, pos, py, y, tail_r)
        for t in ball.tolist():
            for i in range(indptr[t], indptr[t + 1]):
                u = nbr[i]
                for x in inv[u]:
                    if pos[x] < py:
                        result.add(x)
        sets.append(np.array(sorted(result), dtype=np.int32))
    return sets
