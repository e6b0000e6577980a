"""Reachability sets under a vertex ordering and the colouring numbers.

Three reach variants share a shape: for a graph G, an ordering L and a
radius k, every vertex y gets a set of vertices that can "reach" y.

  weak      WReach_k[y]: x with a path x..y of length <= k whose
            vertices all satisfy x <=_L z.
  strong    Reach_k[y]: y itself plus every x <_L y adjacent to the
            ball of radius k-1 around y inside {z : y <=_L z}.
  distance  DReach_k[y]: x reachable from y by a path x = z_0,...,z_s
            (s <= k) on which x is the L-minimum and the vertices at
            positions floor(k/2)+1,...,s are all >=_L y.

The maximum set size is wcol_k(G,L), col_k(G,L) or dcol_k(G,L); the
graph parameter is the minimum over orderings, computed exactly here
at small scale.  DReach_k[y] is a subset of WReach_k[y], and Reach_k[y]
is as well, so dcol <= wcol and col <= wcol pointwise in L.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .sgraph import Graph

KINDS = ("weak", "strong", "distance")

DEFAULT_DREACH_BUDGET = 200_000


class VertexOrdering:
    """A strict total order on vertices 0..n-1.

    order[i] is the vertex at position i (position 0 is the L-minimum).
    Duplicate or out-of-range entries are rejected.
    """

    __slots__ = ("order", "_pos")

    def __init__(self, order):
        self.order = tuple(int(v) for v in order)
        n = len(self.order)
        pos = np.full(n, -1, dtype=np.int32)
        for i, v in enumerate(self.order):
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} outside 0..{n - 1}")
            if pos[v] >= 0:
                raise ValueError(f"vertex {v} listed twice")
            pos[v] = i
        self._pos = pos

    @classmethod
    def identity(cls, n: int) -> "VertexOrdering":
        return cls(range(n))

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __eq__(self, other) -> bool:
        return isinstance(other, VertexOrdering) and self.order == other.order

    def __hash__(self) -> int:
        return hash(self.order)

    def __repr__(self) -> str:
        return f"VertexOrdering({list(self.order)!r})"

    def position(self, v: int) -> int:
        return int(self._pos[v])

    def pos_array(self) -> np.ndarray:
        """Position of each vertex, int32.  A fresh copy each call."""
        return self._pos.copy()


@dataclass(eq=False)
class ReachProfile:
    """Per-vertex reach sets of one kind under one ordering."""

    kind: str
    k: float                    # requested radius; math.inf allowed for weak/strong
    ordering: VertexOrdering
    sets: list                  # sets[y]: sorted int32 array, always contains y
    max_size: int
    argmax_vertex: int          # smallest-id vertex attaining max_size
    method: str = ""
    fallback_count: int = 0     # distance kind: targets recomputed by the layered routine

    @property
    def sizes(self) -> list[int]:
        return [len(s) for s in self.sets]

    def set_of(self, y: int) -> list[int]:
        return [int(x) for x in self.sets[y]]


def _check_ordering(g: Graph, L: VertexOrdering) -> None:
    if len(L) != g.n:
        raise ValueError(f"ordering covers {len(L)} vertices, graph has {g.n}")


def _effective_radius(k, n: int, kind: str) -> int:
    """Clamp the radius to the largest useful value.

    Paths have length at most n-1, so weak and strong sets are constant
    for k >= n-1 and infinity is admitted there.  The distance variant
    depends on k itself (the constrained zone starts at floor(k/2)+1),
    so it takes k literally and rejects infinity.
    """
    if k == math.inf:
        if kind == "distance":
            raise ValueError("distance reach needs a finite radius")
        return max(n - 1, 0)
    kk = int(k)
    if kk != k or kk < 1:
        raise ValueError(f"radius must be a positive integer or math.inf, got {k!r}")
    if kind == "distance":
        return kk
    return min(kk, max(n - 1, 0))


def _finish(kind, k, L, sets, method, fallback_count=0) -> ReachProfile:
    max_size = 0
    argmax = -1
    for y, s in enumerate(sets):
        if len(s) > max_size:
            max_size = len(s)
            argmax = y
    return ReachProfile(kind=kind, k=k, ordering=L, sets=sets,
                        max_size=max_size, argmax_vertex=argmax,
                        method=method, fallback_count=fallback_count)


def wreach_sets(g: Graph, L: VertexOrdering, k) -> ReachProfile:
    """WReach_k sets; max_size is wcol_k(g, L)."""
    _check_ordering(g, L)
    eff = _effective_radius(k, g.n, "weak")
    arrs = g.csr()
    sets = _kernels.wreach_all(arrs[0], arrs[1], L.pos_array(), eff)
    return _finish("weak", k, L, sets, "bfs")


def reach_sets(g: Graph, L: VertexOrdering, k) -> ReachProfile:
    """Reach_k sets; max_size is col_k(g, L)."""
    _check_ordering(g, L)
    eff = _effective_radius(k, g.n, "strong")
    arrs = g.csr()
    indptr, nbr = arrs[0], arrs[1]
    pos = L.pos_array()
    sets = []
    for y in range(g.n):
        py = int(pos[y])
        ball = _kernels.filtered_ball(indptr, nbr, pos, py, y, eff - 1)
        found = {y}
        for t in ball.tolist():
            for i in range(int(indptr[t]), int(indptr[t + 1])):
                x = int(nbr[i])
                if pos[x] < py:
                    found.add(x)
        sets.append(np.array(sorted(found), dtype=np.int32))
    return _finish("strong", k, L, sets, "ball-boundary")


def dreach_sets(g: Graph, L: VertexOrdering, k, *, method: str = "enumerate",
                budget: int = DEFAULT_DREACH_BUDGET) -> ReachProfile:
    """DReach_k sets; max_size is dcol_k(g, L).

    method "enumerate" runs the budgeted path enumeration (overrun
    targets fall back to the exact layered routine and are counted in
    fallback_count); method "layered" runs the layered routine for all
    targets.  Both are exact.
    """
    _check_ordering(g, L)
    eff = _effective_radius(k, g.n, "distance")
    arrs = g.csr()
    pos = L.pos_array()
    if method == "enumerate":
        sets, fb = _kernels.dreach_all(arrs[0], arrs[1], pos, eff, budget)
        return _finish("distance", k, L, sets, "enumerate", int(fb.sum()))
    if method == "layered":
        sets = _kernels.dreach_all_layered(arrs[0], arrs[1], pos, eff)
        return _finish("distance", k, L, sets, "layered")
    raise ValueError(f"unknown method {method!r}")


_PROFILES = {"weak": wreach_sets, "strong": reach_sets, "distance": dreach_sets}


def profile(g: Graph, L: VertexOrdering, kind: str, k) -> ReachProfile:
    """Dispatch on kind; see wreach_sets / reach_sets / dreach_sets."""
    try:
        fn = _PROFILES[kind]
    except KeyError:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}") from None
    return fn(g, L, k)


def degeneracy_ordering(g: Graph) -> VertexOrdering:
    """Smallest-last ordering: each vertex has few earlier neighbours.

    Repeatedly removes a minimum-degree vertex (ties by smallest id)
    and places it after everything that remains, so a graph of
    degeneracy d gets an ordering with left-degree <= d throughout.
    """
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    alive = [True] * n
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = []
    while heap:
        d, v = heapq.heappop(heap)
        if not alive[v] or d != deg[v]:
            continue
        alive[v] = False
        removed.append(v)
        for w in g.neighbours(v):
            if alive[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return VertexOrdering(reversed(removed))


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _adj_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges():
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _min_strong_exact(g: Graph, k) -> tuple[VertexOrdering, int]:
    """Exact col_k minimization by dynamic programming over suffix sets.

    When y is the L-minimum of the suffix set S, |Reach_k[y]| depends on
    S alone: 1 + |N(ball_{k-1}(y, G[S])) \\ S|.  Hence
    f(S) = min over y in S of max(cost(y, S), f(S without y)) is the best
    achievable maximum over orderings, and the argmins read off an
    optimal ordering from the left.
    """
    n = g.n
    if n == 0:
        return VertexOrdering(()), 0
    eff = _effective_radius(k, n, "strong")
    adj = _adj_masks(g)

    def cost(y: int, smask: int) -> int:
        ball = 1 << y
        frontier = [y]
        for _ in range(eff - 1):
            nxt = []
            for u in frontier:
                hits = adj[u] & smask & ~ball
                ball |= hits
                nxt.extend(_bits(hits))
            if not nxt:
                break
            frontier = nxt
        nb = 0
        for u in _bits(ball):
            nb |= adj[u]
        return 1 + (nb & ~smask).bit_count()

    full = (1 << n) - 1
    f = [0] * (full + 1)
    choice = [0] * (full + 1)
    for smask in range(1, full + 1):
        best = n + 1
        besty = -1
        for y in _bits(smask):
            val = max(cost(y, smask), f[smask ^ (1 << y)])
            if val < best:
                best = val
                besty = y
        f[smask] = best
        choice[smask] = besty
    order = []
    smask = full
    while smask:
        y = choice[smask]
        order.append(y)
        smask ^= 1 << y
    L = VertexOrdering(order)
    prof = reach_sets(g, L, k)
    assert prof.max_size == f[full]
    return L, f[full]


def _min_by_permutations(g: Graph, kind: str, k) -> tuple[VertexOrdering, int]:
    n = g.n
    if n == 0:
        return VertexOrdering(()), 0
    best_order = None
    best = n + 1
    for perm in itertools.permutations(range(n)):
        L = VertexOrdering(perm)
        val = profile(g, L, kind, k).max_size
        if val < best:
            best = val
            best_order = L
    return best_order, best


def minimize_over_orderings(g: Graph, kind: str, k, *, mode: str = "auto",
                            cap: int = 10,
                            extra_orderings=()) -> tuple[VertexOrdering, int]:
    """Ordering minimizing wcol_k / col_k / dcol_k, with its value.

    Exhaustive mode (the default up to `cap` vertices) is exact: a
    suffix-set DP for the strong kind, brute force over permutations
    otherwise.  Heuristic mode evaluates the smallest-last ordering plus
    any supplied candidates and keeps the best; the result is an upper
    bound only.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    n = g.n
    if mode == "auto":
        mode = "exhaustive" if n <= cap else "heuristic"
    if mode == "exhaustive":
        if n > cap:
            raise ValueError(f"exhaustive mode capped at {cap} vertices, graph has {n}")
        if kind == "strong":
            return _min_strong_exact(g, k)
        return _min_by_permutations(g, kind, k)
    if mode != "heuristic":
        raise ValueError(f"mode must be auto, exhaustive or heuristic, got {mode!r}")
    candidates = [degeneracy_ordering(g)]
    candidates.extend(extra_orderings)
    best_order = None
    best = n + 1
    for L in candidates:
        val = profile(g, L, kind, k).max_size
        if val < best:
            best = val
            best_order = L
    return best_order, best


def treewidth_small(g: Graph, cap: int = 10) -> int:
    """Exact treewidth by elimination-prefix dynamic programming.

    f(E) is the least width of an elimination order starting with the
    set E; eliminating v last among E costs the number of neighbours of
    v's component in G[E] that lie outside E.  The empty graph gets -1
    by the f(empty) convention, a single vertex 0.
    """
    n = g.n
    if n > cap:
        raise ValueError(f"exact treewidth capped at {cap} vertices, graph has {n}")
    if n == 0:
        return -1
    adj = _adj_masks(g)
    full = (1 << n) - 1
    f = [0] * (full + 1)
    f[0] = -1
    for emask in range(1, full + 1):
        best = n
        for v in _bits(emask):
            comp = 1 << v
            stack = [v]
            while stack:
                u = stack.pop()
                hits = adj[u] & emask & ~comp
                comp |= hits
                stack.extend(_bits(hits))
            nb = 0
            for u in _bits(comp):
                nb |= adj[u]
            d = (nb & ~emask).bit_count()
            val = max(f[emask ^ (1 << v)], d)
            if val < best:
                best = val
        f[emask] = best
    return f[full]
