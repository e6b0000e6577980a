"""Instance generators: the named gadget families plus seeded corpora.

Every generator is a pure function of its parameters and seed.  Signed
constructions realise a "negative path" with exactly one negative edge,
always the first one along the path; clique edges in the subset gadget
are all positive.  Both conventions are arbitrary but fixed, so outputs
are reproducible byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .orderings import VertexOrdering
from .planar import Triangulation
from .sgraph import NEGATIVE, POSITIVE, SignedGraph

FAMILIES = ("snk", "star_gadget", "k7_gadget", "clique_indep",
            "signed_2tree", "apollonian", "random_signed")


def gen_snk(n: int, k: int) -> SignedGraph:
    """Subdivided clique: K_n with every edge replaced by a path of
    length k whose first edge is negative.

    Branch vertices are 0..n-1; the k-1 subdivision vertices of each
    edge follow, edges in lexicographic order.  Branch vertices end up
    pairwise at distance exactly k with every connecting path negative.
    """
    if n < 2 or k < 2:
        raise ValueError(f"need n >= 2 and k >= 2, got ({n},{k})")
    g = SignedGraph(n + (k - 1) * n * (n - 1) // 2)
    nxt = n
    for u, v in combinations(range(n), 2):
        chain = [u] + list(range(nxt, nxt + k - 1)) + [v]
        nxt += k - 1
        for i, (a, b) in enumerate(zip(chain, chain[1:])):
            g.add_edge(a, b, NEGATIVE if i == 0 else POSITIVE)
    return g


def snk_ordering(n: int, k: int) -> VertexOrdering:
    """Ordering shipped with gen_snk: branch vertices first, then the
    subdivision vertices by (edge, position).  That is the generator's
    own labelling, so the ordering is the identity."""
    return VertexOrdering(range(n + (k - 1) * n * (n - 1) // 2))


def gen_star_gadget(leaves: int, k: int) -> SignedGraph:
    """Star K_{1,leaves} with every edge doubled into one all-positive
    and one single-negative-edge path, each of length k/2.

    Centre is 0, leaves are 1..leaves.  Any two leaves sit at distance
    k joined by positive as well as negative paths, so the strong
    exact-distance graph gains a clique on the leaves while the
    every-negative variant stays empty there.
    """
    if leaves < 2:
        raise ValueError(f"need at least 2 leaves, got {leaves}")
    if k < 4 or k % 2:
        raise ValueError(f"need even k >= 4, got {k}")
    half = k // 2
    g = SignedGraph(1 + leaves + 2 * leaves * (half - 1))
    nxt = 1 + leaves
    for leaf in range(1, leaves + 1):
        for first_sign in (POSITIVE, NEGATIVE):
            chain = [0] + list(range(nxt, nxt + half - 1)) + [leaf]
            nxt += half - 1
            for i, (a, b) in enumerate(zip(chain, chain[1:])):
                g.add_edge(a, b, first_sign if i == 0 else POSITIVE)
    return g


def gen_k7_gadget() -> SignedGraph:
    """Two negative length-2 paths 0-1-2 and 3-4-5 plus a universal
    vertex 6, positive towards the first path and negative towards the
    second.  The union with the strong square is the complete graph on
    7 vertices, yet the underlying graph has treewidth 2."""
    g = SignedGraph(7)
    g.add_edge(0, 1, NEGATIVE)
    g.add_edge(1, 2, POSITIVE)
    g.add_edge(3, 4, NEGATIVE)
    g.add_edge(4, 5, POSITIVE)
    for v in range(3):
        g.add_edge(6, v, POSITIVE)
    for v in range(3, 6):
        g.add_edge(6, v, NEGATIVE)
    return g


def gen_clique_indep(t: int) -> SignedGraph:
    """All-positive clique 0..t-1 plus an independent set of 2^t
    vertices, one per sign pattern towards the clique.

    Vertex t + mask joins clique vertex c negatively iff bit c of mask
    is set.  Any two independent vertices disagree on some clique
    vertex, giving a negative 2-path between them."""
    if not 1 <= t <= 12:
        raise ValueError(f"need 1 <= t <= 12, got {t}")
    g = SignedGraph(t + (1 << t))
    for u, v in combinations(range(t), 2):
        g.add_edge(u, v, POSITIVE)
    for mask in range(1 << t):
        for c in range(t):
            g.add_edge(t + mask, c, NEGATIVE if mask >> c & 1 else POSITIVE)
    return g


def gen_signed_2tree(n: int, seed: int) -> SignedGraph:
    """Seeded random 2-tree: grow from an edge, each new vertex joined
    to both endpoints of a uniformly random existing edge, all signs
    uniform."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    rng = random.Random(seed)

    def sign():
        return NEGATIVE if rng.getrandbits(1) else POSITIVE

    g = SignedGraph(n)
    g.add_edge(0, 1, sign())
    edges = [(0, 1)]
    for v in range(2, n):
        a, b = edges[rng.randrange(len(edges))]
        g.add_edge(a, v, sign())
        g.add_edge(b, v, sign())
        edges.append((a, v))
        edges.append((b, v))
    return g


_APOLLONIAN_ROT = ([1, 3, 2], [2, 3, 0], [0, 3, 1], [0, 1, 2])
_APOLLONIAN_FACES = ((1, 0, 3), (2, 1, 3), (0, 2, 3))


def _insert_into_face(rot, faces, idx):
    """Subdivide oriented face (x, y, z) with a fresh vertex.

    Triples are oriented along the face walk: at x the rotation reads
    ..., z, y, ...; the new vertex goes into that gap at all three
    corners, and the face is spliced into its three children in place.
    """
    x, y, z = faces[idx]
    v = len(rot)
    rot.append([x, z, y])
    rot[x].insert(rot[x].index(y), v)
    rot[y].insert(rot[y].index(z), v)
    rot[z].insert(rot[z].index(x), v)
    faces[idx:idx + 1] = [(x, v, z), (x, y, v), (y, z, v)]


def gen_apollonian(depth: int, seed=None) -> Triangulation:
    """Stacked triangulation grown from K4 by face subdivision.

    Without a seed, every internal face is subdivided in each of
    `depth` rounds (n grows by 3^d in round d; capped at depth 8).
    With a seed, `depth` single vertices are inserted into uniformly
    random faces, giving n = 4 + depth.  The outer face (0,1,2) is
    never subdivided.
    """
    if depth < 0:
        raise ValueError(f"need depth >= 0, got {depth}")
    rot = [list(r) for r in _APOLLONIAN_ROT]
    faces = list(_APOLLONIAN_FACES)
    if seed is None:
        if depth > 8:
            raise ValueError(f"full mode capped at depth 8, got {depth}")
        for _ in range(depth):
            for idx in range(len(faces) - 1, -1, -1):
                _insert_into_face(rot, faces, idx)
    else:
        rng = random.Random(seed)
        for _ in range(depth):
            _insert_into_face(rot, faces, rng.randrange(len(faces)))
    return Triangulation(rot, (0, 1, 2))


def gen_random_signed(n: int, p: float, seed: int) -> SignedGraph:
    """Erdos-Renyi skeleton with uniform signs.  Two draws per vertex
    pair, presence then sign, so the skeleton at a fixed seed does not
    depend on how signs are consumed."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise ValueError(f"need n >= 0 and 0 <= p <= 1, got ({n},{p})")
    rng = random.Random(seed)
    g = SignedGraph(n)
    for u, v in combinations(range(n), 2):
        present = rng.random() < p
        s = NEGATIVE if rng.getrandbits(1) else POSITIVE
        if present:
            g.add_edge(u, v, s)
    return g


@dataclass(frozen=True)
class FamilySpec:
    """Generator id plus positional parameters and an optional seed."""

    family: str
    params: tuple = ()
    seed: int = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}, "
                             f"expected one of {FAMILIES}")
        object.__setattr__(self, "params", tuple(self.params))


def generate(spec: FamilySpec):
    """Dispatch a FamilySpec to its generator."""
    fam, p = spec.family, spec.params
    if fam == "snk":
        return gen_snk(int(p[0]), int(p[1]))
    if fam == "star_gadget":
        return gen_star_gadget(int(p[0]), int(p[1]))
    if fam == "k7_gadget":
        return gen_k7_gadget()
    if fam == "clique_indep":
        return gen_clique_indep(int(p[0]))
    if fam == "signed_2tree":
        return gen_signed_2tree(int(p[0]), 0 if spec.seed is None else spec.seed)
    if fam == "apollonian":
        return gen_apollonian(int(p[0]), spec.seed)
    if fam == "random_signed":
        return gen_random_signed(int(p[0]), float(p[1]),
                                 0 if spec.seed is None else spec.seed)
    raise AssertionError(fam)
