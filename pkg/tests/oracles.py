"""Brute-force reference implementations, kept deliberately naive.

Everything here enumerates: simple paths by depth-first search, optimal
orderings by trying every permutation, chromatic numbers and treewidth
by exhaustive backtracking.  The library must agree with these on small
instances; none of this code shares logic with the package.
"""

from itertools import combinations, permutations

from sgcol.sgraph import NEGATIVE, SignedGraph


def simple_paths(adj, start, max_len):
    """Every simple path from start with at most max_len edges,
    the trivial path included."""
    path = [start]
    used = {start}
    out = [list(path)]

    def walk():
        if len(path) - 1 == max_len:
            return
        for nb in adj(path[-1]):
            if nb in used:
                continue
            path.append(nb)
            used.add(nb)
            out.append(list(path))
            walk()
            used.discard(nb)
            path.pop()

    walk()
    return out


def path_sign(sg: SignedGraph, path) -> int:
    s = 1
    for a, b in zip(path, path[1:]):
        s *= sg.sign(a, b)
    return s


def bfs_dist(g, source):
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for v in g.neighbours(u):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def brute_exact_distance_pairs(sg: SignedGraph, k: int, variant: str):
    """Pairs of the exact-distance -k graph by full path enumeration."""
    g = sg.underlying()
    pairs = []
    for u in range(g.n):
        dist = bfs_dist(g, u)
        for v in range(u + 1, g.n):
            if dist.get(v) != k:
                continue
            signs = {path_sign(sg, p)
                     for p in simple_paths(g.neighbours, u, k)
                     if len(p) - 1 == k and p[-1] == v}
            if variant == "every_negative" and signs == {NEGATIVE}:
                pairs.append((u, v))
            elif variant == "some_negative" and NEGATIVE in signs:
                pairs.append((u, v))
            elif variant == "exact" and signs:
                pairs.append((u, v))
    return pairs


def brute_shortest_sign_counts(sg: SignedGraph, source):
    """Per reachable target: (distance, positive shortest-path count,
    negative shortest-path count)."""
    g = sg.underlying()
    dist = bfs_dist(g, source)
    counts = {}
    horizon = max(dist.values(), default=0)
    paths = simple_paths(g.neighbours, source, horizon)
    for v, d in dist.items():
        signs = [path_sign(sg, p) for p in paths
                 if p[-1] == v and len(p) - 1 == d]
        counts[v] = (d, sum(1 for s in signs if s == 1),
                     sum(1 for s in signs if s == NEGATIVE))
    return counts


def brute_wreach(g, L, k, y):
    pos = {v: L.position(v) for v in range(g.n)}
    out = set()
    for p in simple_paths(g.neighbours, y, k):
        x = p[-1]
        if pos[x] == min(pos[w] for w in p):
            out.add(x)
    return sorted(out)


def brute_reach(g, L, k, y):
    pos = {v: L.position(v) for v in range(g.n)}
    out = {y}
    for p in simple_paths(g.neighbours, y, k):
        x = p[-1]
        if len(p) > 1 and pos[x] < pos[y] \
                and all(pos[w] > pos[y] for w in p[1:-1]):
            out.add(x)
    return sorted(out)


def brute_dreach(g, L, k, y):
    """Paths are walked from y; writing them from the far end x, the
    vertices at positions floor(k/2)+1 .. s must not sit below y, which
    is the first s - floor(k/2) steps out of y."""
    pos = {v: L.position(v) for v in range(g.n)}
    m = k // 2
    out = {y}
    for p in simple_paths(g.neighbours, y, k):
        x = p[-1]
        t = len(p) - 1
        if t == 0 or pos[x] != min(pos[w] for w in p):
            continue
        if all(pos[p[i]] >= pos[y] for i in range(1, max(t - m, 0))):
            out.add(x)
    return sorted(out)


BRUTE_SETS = {"weak": brute_wreach, "strong": brute_reach, "distance": brute_dreach}


def brute_profile_value(g, L, kind, k):
    fn = BRUTE_SETS[kind]
    return max(len(fn(g, L, k, y)) for y in range(g.n)) if g.n else 0


def brute_min_colnum(g, kind, k):
    """Minimum over every ordering, first lexicographic argmin kept."""
    from sgcol.orderings import VertexOrdering

    best, best_order = g.n + 1, None
    for perm in permutations(range(g.n)):
        val = brute_profile_value(g, VertexOrdering(perm), kind, k)
        if val < best:
            best, best_order = val, perm
    return best, best_order


def brute_chromatic(g) -> int:
    n = g.n
    if n == 0:
        return 0
    for t in range(1, n + 1):
        colour = [-1] * n

        def ok(v, c):
            return all(colour[w] != c for w in g.neighbours(v))

        def place(v):
            if v == n:
                return True
            for c in range(t):
                if ok(v, c):
                    colour[v] = c
                    if place(v + 1):
                        return True
                    colour[v] = -1
            return False

        if place(0):
            return t
    raise AssertionError("unreachable")


def brute_treewidth(g) -> int:
    """Minimum elimination width over every ordering, with fill-in."""
    n = g.n
    if n == 0:
        return -1
    best = n - 1
    base = {v: set(g.neighbours(v)) for v in range(n)}
    for perm in permutations(range(n)):
        adj = {v: set(nbrs) for v, nbrs in base.items()}
        width = 0
        for v in perm:
            width = max(width, len(adj[v]))
            if width >= best + 1:
                break
            nbrs = adj.pop(v)
            for a in nbrs:
                adj[a].discard(v)
            for a, b in combinations(nbrs, 2):
                adj[a].add(b)
                adj[b].add(a)
        else:
            best = min(best, width)
    return best


def is_outerplanar(g) -> bool:
    """Planarity of the graph plus one universal apex vertex."""
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n + 1))
    for u, v in g.edges():
        h.add_edge(u, v)
    for v in range(g.n):
        h.add_edge(g.n, v)
    return nx.check_planarity(h)[0]
