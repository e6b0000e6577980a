"""Signed graphs and their exact-distance graphs.

Vertices are dense integers 0..n-1.  A signed graph carries a sign in
{+1, -1} on every edge, and the sign of a path is the product of its
edge signs.

For k >= 1 the exact-distance graph on a signed graph keeps the vertex
set and joins x and y when d(x, y) = k and the length-k xy-paths have
the requested signs:

    every_negative   all length-k xy-paths are negative
    some_negative    at least one length-k xy-path is negative

Since d(x, y) = k, the length-k paths are exactly the shortest paths,
so both predicates reduce to counting shortest paths of each sign.
Counts are kept as plain Python integers: they can grow exponentially
with the graph, and exact values let tests cross-check against path
enumeration.  The edge predicates themselves only need zero/nonzero,
which is what the kernels track.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from collections import deque
from typing import NamedTuple

import numpy as np

from . import _kernels

POSITIVE = 1
NEGATIVE = -1

SIGN_CHARS = {POSITIVE: "+", NEGATIVE: "-"}
CHAR_SIGNS = {"+": POSITIVE, "-": NEGATIVE}


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Adjacency lists are kept sorted so that iteration order, and with it
    every downstream tie-break, is deterministic.
    """

    def __init__(self, n: int = 0):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self._m = 0
        self._csr = None

    @classmethod
    def from_edges(cls, n, edges):
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def _check_vertex(self, v):
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")

    def add_vertex(self) -> int:
        self.adj.append([])
        self.n += 1
        self._csr = None
        return self.n - 1

    def add_edge(self, u, v):
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if self.has_edge(u, v):
            raise ValueError(f"duplicate edge {u}-{v}")
        insort(self.adj[u], v)
        insort(self.adj[v], u)
        self._m += 1
        self._csr = None

    def has_edge(self, u, v) -> bool:
        row = self.adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def neighbours(self, v):
        # sorted; callers must not mutate
        return self.adj[v]

    def degree(self, v) -> int:
        return len(self.adj[v])

    @property
    def m(self) -> int:
        return self._m

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield u, v

    def copy(self):
        g = Graph(self.n)
        g.adj = [list(row) for row in self.adj]
        g._m = self._m
        return g

    def csr(self):
        """(indptr, nbr) int32 arrays for the kernels; cached."""
        if self._csr is None:
            self._csr = _build_csr(self.adj)
        return self._csr

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, m={self.m})"


class SignedGraph(Graph):
    """Graph plus a sign in {+1, -1} per edge."""

    def __init__(self, n: int = 0):
        super().__init__(n)
        self._sign: dict[tuple[int, int], int] = {}

    @classmethod
    def from_edges(cls, n, edges):
        g = cls(n)
        for u, v, s in edges:
            g.add_edge(u, v, s)
        return g

    def add_edge(self, u, v, sign):
        if sign not in (POSITIVE, NEGATIVE):
            raise ValueError(f"sign must be +1 or -1, got {sign!r}")
        super().add_edge(u, v)
        self._sign[(u, v) if u < v else (v, u)] = sign

    def sign(self, u, v) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._sign[key]
        except KeyError:
            raise ValueError(f"no edge {u}-{v}") from None

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield u, v, self._sign[(u, v)]

    def underlying(self) -> Graph:
        g = Graph(self.n)
        g.adj = [list(row) for row in self.adj]
        g._m = self._m
        return g

    def copy(self):
        g = SignedGraph(self.n)
        g.adj = [list(row) for row in self.adj]
        g._m = self._m
        g._sign = dict(self._sign)
        return g

    def csr(self):
        """(indptr, nbr, esign) arrays; esign[i] signs the edge to nbr[i]."""
        if self._csr is None:
            indptr, nbr = _build_csr(self.adj)
            esign = np.empty(len(nbr), dtype=np.int8)
            k = 0
            for u in range(self.n):
                for v in self.adj[u]:
                    esign[k] = self._sign[(u, v) if u < v else (v, u)]
                    k += 1
            self._csr = (indptr, nbr, esign)
        return self._csr


def _build_csr(adj):
    n = len(adj)
    indptr = np.zeros(n + 1, dtype=np.int32)
    for v in range(n):
        indptr[v + 1] = indptr[v] + len(adj[v])
    nbr = np.empty(int(indptr[n]), dtype=np.int32)
    k = 0
    for v in range(n):
        row = adj[v]
        nbr[k:k + len(row)] = row
        k += len(row)
    return indptr, nbr


class PathSignCounts(NamedTuple):
    source: int
    target: int
    distance: int | None          # None marks unreachable
    positive_count: int
    negative_count: int


def bfs_distances(g, source):
    """Hop distances from source as {vertex: distance}, None if unreachable."""
    g._check_vertex(source)
    dist = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] is None:
                dist[v] = du
                queue.append(v)
    return {v: dist[v] for v in range(g.n)}


def shortest_path_sign_counts(g: SignedGraph, source):
    """Numbers of positive and negative shortest paths from source.

    Layered DP over the BFS DAG: a length-d walk between vertices at
    distance d cannot repeat a vertex, so the DP counts exactly the
    shortest paths.  The empty path at the source counts as positive.
    """
    g._check_vertex(source)
    n = g.n
    dist = [-1] * n
    pos = [0] * n
    neg = [0] * n
    dist[source] = 0
    pos[source] = 1
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        pu, nu = pos[u], neg[u]
        for v in g.adj[u]:
            if dist[v] == -1:
                dist[v] = du
                queue.append(v)
            if dist[v] == du:
                if g.sign(u, v) == POSITIVE:
                    pos[v] += pu
                    neg[v] += nu
                else:
                    pos[v] += nu
                    neg[v] += pu
    return {
        v: PathSignCounts(source, v, dist[v] if dist[v] >= 0 else None,
                          pos[v], neg[v])
        for v in range(n)
    }


EXACT_DISTANCE_VARIANTS = ("every_negative", "some_negative")


def exact_distance_graph(g: SignedGraph, k: int, variant: str) -> Graph:
    """The exact-distance -k graph of g, every_negative or some_negative.

    k beyond the diameter yields the empty graph on V(g); that is a
    degenerate input, not an error.  k = 0 is rejected.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if variant not in EXACT_DISTANCE_VARIANTS:
        raise ValueError(f"variant must be one of {EXACT_DISTANCE_VARIANTS}")
    indptr, nbr, esign = g.csr()
    mode = 1 if variant == "every_negative" else 2
    pairs = _kernels.exact_distance_pairs(indptr, nbr, esign, k, mode)
    out = Graph(g.n)
    for u, v in pairs.tolist():
        out.add_edge(u, v)
    return out


def unsigned_exact_distance_graph(g: Graph, k: int) -> Graph:
    """Edge xy iff d(x, y) = k exactly."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    indptr, nbr = g.csr()[:2]
    pairs = _kernels.exact_distance_pairs(indptr, nbr, None, k, 0)
    out = Graph(g.n)
    for u, v in pairs.tolist():
        out.add_edge(u, v)
    return out


def graph_union(a: Graph, b: Graph) -> Graph:
    """Union of edge sets over a shared vertex set."""
    if a.n != b.n:
        raise ValueError(f"vertex counts differ: {a.n} vs {b.n}")
    out = Graph(a.n)
    for u, v in a.edges():
        out.add_edge(u, v)
    for u, v in b.edges():
        if not out.has_edge(u, v):
            out.add_edge(u, v)
    return out
