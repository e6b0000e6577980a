"""Seven colours for signed graphs of treewidth two.

Every vertex receives a triple (c, A, B): its colour, a 3-set of
"positive" colours and a disjoint 3-set of "negative" colours, none of
them containing c.  Along every edge the four cross intersections
A_x 'n' A_z, A_x 'n' B_z, B_x 'n' A_z, B_x 'n' B_z are nonempty, a positive
edge has c(x) in A_z and c(z) in A_x, and a negative edge has c(x) in
B_z and c(z) in B_x.  These conditions force endpoints of edges and of
negative 2-paths apart, so c is proper on the union of the graph with
its strong exact-distance-2 graph.

The construction peels degree-2 vertices down to an edge, seeds the two
base vertices, and rebuilds: each reinserted vertex z with parents x, y
gets its triple from a fixed table indexed by the three edge signs,
after a colour permutation moving (C(x), C(y)) onto the canonical pair.
Inputs that are only partial 2-trees are completed with positive edges
first; completion can enlarge the strong square, so properness is
guaranteed on the original graph's square (and checked there by the
callers), not on the completion's.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .sgraph import NEGATIVE, POSITIVE, SignedGraph

LABELS = frozenset(range(1, 8))

# canonical coloured pairs for the two edge signs
_BASE_POS = ((1, frozenset({2, 3, 4}), frozenset({5, 6, 7})),
             (2, frozenset({1, 3, 5}), frozenset({4, 6, 7})))
_BASE_NEG = ((1, frozenset({2, 3, 4}), frozenset({5, 6, 7})),
             (5, frozenset({2, 4, 6}), frozenset({1, 3, 7})))

# triple for a vertex z added onto the canonical pair, keyed by the
# signs (xy, xz, yz); entries are written in canonical labels
_TABLE = {
    (POSITIVE, POSITIVE, POSITIVE): (3, (1, 2, 6), (4, 5, 7)),
    (POSITIVE, POSITIVE, NEGATIVE): (4, (1, 3, 6), (2, 5, 7)),
    (POSITIVE, NEGATIVE, POSITIVE): (5, (2, 3, 7), (1, 4, 6)),
    (POSITIVE, NEGATIVE, NEGATIVE): (7, (3, 4, 5), (1, 2, 6)),
    (NEGATIVE, POSITIVE, POSITIVE): (2, (1, 4, 5), (3, 6, 7)),
    (NEGATIVE, POSITIVE, NEGATIVE): (3, (1, 2, 6), (4, 5, 7)),
    (NEGATIVE, NEGATIVE, POSITIVE): (6, (2, 3, 5), (1, 4, 7)),
    (NEGATIVE, NEGATIVE, NEGATIVE): (7, (3, 4, 6), (1, 2, 5)),
}


class NotTwoTreeError(ValueError):
    """The underlying graph is not a (partial) 2-tree."""


class RelabellingError(RuntimeError):
    """An edge's triples do not show the intersection pattern the
    construction maintains; carries the offending edge."""

    def __init__(self, edge, message):
        super().__init__(f"edge {edge}: {message}")
        self.edge = edge


@dataclass
class Assignment733:
    """Per-vertex triples (c, A, B) with colours from {1,...,7}."""

    triples: dict

    def triple(self, v):
        return self.triples[v]

    def colour(self, v) -> int:
        return self.triples[v][0]

    def check(self, g: SignedGraph) -> list[str]:
        """All conditions on g's vertices and edges; empty means valid."""
        bad = []
        for v in range(g.n):
            t = self.triples.get(v)
            if t is None:
                bad.append(f"vertex {v}: no triple")
                continue
            c, a, b = t
            if c not in LABELS or not a <= LABELS or not b <= LABELS:
                bad.append(f"vertex {v}: labels outside 1..7")
            if len(a) != 3 or len(b) != 3:
                bad.append(f"vertex {v}: |A| or |B| is not 3")
            if a & b:
                bad.append(f"vertex {v}: A meets B")
            if c in a | b:
                bad.append(f"vertex {v}: colour inside A or B")
        for u, v, s in g.edges():
            if u not in self.triples or v not in self.triples:
                continue  # endpoint already reported above
            cu, au, bu = self.triples[u]
            cv, av, bv = self.triples[v]
            for pa, pb, name in ((au, av, "A-A"), (au, bv, "A-B"),
                                 (bu, av, "B-A"), (bu, bv, "B-B")):
                if not pa & pb:
                    bad.append(f"edge ({u},{v}): empty {name} intersection")
            if s == POSITIVE:
                if cu not in av or cv not in au:
                    bad.append(f"edge ({u},{v}): positive condition fails")
            else:
                if cu not in bv or cv not in bu:
                    bad.append(f"edge ({u},{v}): negative condition fails")
        return bad


def _only(s, edge, what):
    if len(s) != 1:
        raise RelabellingError(edge, f"{what} has size {len(s)}, expected 1")
    return next(iter(s))


def _pair(s, edge, what):
    if len(s) != 2:
        raise RelabellingError(edge, f"{what} has size {len(s)}, expected 2")
    return sorted(s)


def _canonical_map(tx, ty, sign, edge):
    """Labels-by-role for mapping (tx, ty) onto the canonical pair.

    Returns role[i] = actual label acting as canonical label i+1.  The
    intersection patterns (1,1,1,2 for a positive edge, 2,1,1,1 for a
    negative one) pin every role down; the two symmetric roles are
    ordered by label value, which is a canonical-pair automorphism.
    """
    cx, ax, bx = tx
    cy, ay, by = ty
    role = [0] * 8
    if sign == POSITIVE:
        role[1] = cx
        role[2] = cy
        role[3] = _only(ax & ay, edge, "A-A")
        role[4] = _only(ax & by, edge, "A-B")
        role[5] = _only(bx & ay, edge, "B-A")
        role[6], role[7] = _pair(bx & by, edge, "B-B")
    else:
        role[1] = cx
        role[5] = cy
        role[2], role[4] = _pair(ax & ay, edge, "A-A")
        role[3] = _only(ax & by, edge, "A-B")
        role[6] = _only(bx & ay, edge, "B-A")
        role[7] = _only(bx & by, edge, "B-B")
    if sorted(role[1:]) != sorted(LABELS):
        raise RelabellingError(edge, "roles do not cover 1..7")
    return role


def _child_triple(tx, ty, sxy, sxz, syz, edge):
    role = _canonical_map(tx, ty, sxy, edge)
    c_i, a_is, b_is = _TABLE[(sxy, sxz, syz)]
    return (role[c_i],
            frozenset(role[i] for i in a_is),
            frozenset(role[i] for i in b_is))


def _edge_ok(tu, tv, s) -> bool:
    cu, au, bu = tu
    cv, av, bv = tv
    if not (au & av and au & bv and bu & av and bu & bv):
        return False
    if s == POSITIVE:
        return cu in av and cv in au
    return cu in bv and cv in bu


def _complete_to_2tree(g: SignedGraph):
    """Peel low-degree vertices, adding positive fill edges as needed.

    Returns (h, peel, base): the completed graph, the peel sequence of
    (child, parent, parent) triples in removal order, and the base edge.
    Fails when some intermediate graph has minimum degree 3 or more.
    """
    h = g.copy()
    n = h.n
    adj = [set(h.neighbours(v)) for v in range(n)]
    alive = [True] * n

    def ensure(u, v):
        if v not in adj[u]:
            h.add_edge(u, v, POSITIVE)
            adj[u].add(v)
            adj[v].add(u)

    def alive_others(v, exclude):
        return [w for w in range(n) if alive[w] and w != v and w not in exclude]

    peel = []
    remaining = n
    while remaining > 2:
        pick = -1
        for v in range(n):
            if alive[v] and sum(1 for w in adj[v] if alive[w]) <= 2:
                pick = v
                break
        if pick < 0:
            raise NotTwoTreeError("minimum degree 3 reached while peeling")
        nbrs = sorted(w for w in adj[pick] if alive[w])
        if len(nbrs) == 2:
            x, y = nbrs
        elif len(nbrs) == 1:
            x = nbrs[0]
            # prefer a second parent already adjacent to x
            cands = alive_others(pick, {x})
            adj_first = [w for w in cands if w in adj[x]]
            y = adj_first[0] if adj_first else cands[0]
            ensure(pick, y)
        else:
            x, y = alive_others(pick, ())[:2]
            ensure(pick, x)
            ensure(pick, y)
        ensure(x, y)
        peel.append((pick, x, y))
        alive[pick] = False
        remaining -= 1
    base = tuple(v for v in range(n) if alive[v])
    if len(base) == 2:
        ensure(base[0], base[1])
    return h, peel, base


def colour_2tree_7(g: SignedGraph):
    """Triple assignment plus the derived colouring, 0-based over 7.

    The input's underlying graph must be a subgraph of some 2-tree.
    Conditions (i)-(vi) are asserted after every insertion, so a broken
    table entry or relabelling cannot pass silently.
    """
    from .colorers import Colouring  # imported here to avoid a cycle

    n = g.n
    if n == 0:
        return Assignment733({}), Colouring({}, 7)
    if n == 1:
        return (Assignment733({0: _BASE_POS[0]}),
                Colouring({0: _BASE_POS[0][0] - 1}, 7))
    h, peel, base = _complete_to_2tree(g)
    a, b = base
    sbase = h.sign(a, b)
    pair = _BASE_POS if sbase == POSITIVE else _BASE_NEG
    triples = {a: pair[0], b: pair[1]}
    for z, x, y in reversed(peel):
        sxy = h.sign(x, y)
        sxz = h.sign(x, z)
        syz = h.sign(y, z)
        tz = _child_triple(triples[x], triples[y], sxy, sxz, syz, (x, y))
        c, aa, bb = tz
        assert c not in aa | bb and not aa & bb and len(aa) == 3 and len(bb) == 3
        assert _edge_ok(triples[x], tz, sxz), (x, z)
        assert _edge_ok(triples[y], tz, syz), (y, z)
        triples[z] = tz
    asg = Assignment733(triples)
    bad = asg.check(h)
    assert not bad, bad
    colouring = Colouring({v: triples[v][0] - 1 for v in range(n)}, 7)
    return asg, colouring


@dataclass
class TargetGraphP133:
    """The signed graph on all ordered partitions (x, A, B) of {1,...,7}
    with |A| = |B| = 3: a positive edge joins (x,A,B) to (y,A',B') when
    x is in A' and y is in A, a negative one when x is in B' and y is in B."""

    graph: SignedGraph
    triples: list
    index: dict

    @property
    def n(self) -> int:
        return self.graph.n


def build_target_p133() -> TargetGraphP133:
    triples = []
    for c in range(1, 8):
        rest = sorted(LABELS - {c})
        for a in itertools.combinations(rest, 3):
            aset = frozenset(a)
            bset = frozenset(rest) - aset
            triples.append((c, aset, bset))
    assert len(triples) == 140
    g = SignedGraph(140)
    for i, j in itertools.combinations(range(140), 2):
        ci, ai, bi = triples[i]
        cj, aj, bj = triples[j]
        if ci in aj and cj in ai:
            g.add_edge(i, j, POSITIVE)
        elif ci in bj and cj in bi:
            g.add_edge(i, j, NEGATIVE)
    index = {t: i for i, t in enumerate(triples)}
    return TargetGraphP133(g, triples, index)


def first_coordinate_colouring(target: TargetGraphP133):
    """Colour each partition by its first coordinate, 0-based."""
    from .colorers import Colouring

    return Colouring({i: target.triples[i][0] - 1 for i in range(target.n)}, 7)


def hom_to_p133(g: SignedGraph, asg: Assignment733, target: TargetGraphP133 | None = None):
    """Vertex map into the target graph induced by a valid assignment.

    Verifies the assignment on g first, then checks edge by edge that
    signs are preserved.  Returns {vertex: target index}.
    """
    bad = asg.check(g)
    if bad:
        raise ValueError("assignment invalid: " + "; ".join(bad[:5]))
    if target is None:
        target = build_target_p133()
    mapping = {}
    for v in range(g.n):
        c, a, b = asg.triples[v]
        mapping[v] = target.index[(c, frozenset(a), frozenset(b))]
    for u, v, s in g.edges():
        if target.graph.sign(mapping[u], mapping[v]) != s:
            raise ValueError(f"edge ({u},{v}) does not map sign-preservingly")
    return mapping
