"""Kernel twins against each other and against path enumeration."""

import random

import numpy as np
import pytest

import oracles
from sgcol._kernels import BACKEND, pure
from sgcol.orderings import VertexOrdering
from sgcol.sgraph import NEGATIVE, POSITIVE, SignedGraph, bfs_distances

try:
    from sgcol._kernels import _cext
except ImportError:
    _cext = None

BACKENDS = [pure] + ([_cext] if _cext is not None else [])
BACKEND_IDS = ["pure"] + (["cext"] if _cext is not None else [])


def seeded_signed(n, p, seed):
    rng = random.Random(seed)
    g = SignedGraph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v, NEGATIVE if rng.getrandbits(1) else POSITIVE)
    return g


def seeded_ordering(n, seed):
    order = list(range(n))
    random.Random(seed).shuffle(order)
    return VertexOrdering(order)


CORPUS = [(seeded_signed(9, 0.35, s), seeded_ordering(9, 50 + s)) for s in range(6)]


@pytest.fixture(params=BACKENDS, ids=BACKEND_IDS)
def kern(request):
    return request.param


def test_backend_selected():
    assert BACKEND in ("pure", "cext")


class TestBfs:
    def test_matches_reference(self, kern):
        for g, _ in CORPUS:
            indptr, nbr = g.csr()[:2]
            for s in range(g.n):
                got = kern.bfs_all_dists(indptr, nbr, s)
                want = bfs_distances(g, s)
                assert got.dtype == np.int32
                for v in range(g.n):
                    assert got[v] == (-1 if want[v] is None else want[v])


class TestExactDistancePairs:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_signed_modes(self, kern, k):
        for g, _ in CORPUS:
            indptr, nbr, esign = g.csr()
            for mode, variant in ((1, "every_negative"), (2, "some_negative")):
                got = sorted(map(tuple, kern.exact_distance_pairs(
                    indptr, nbr, esign, k, mode).tolist()))
                assert got == oracles.brute_exact_distance_pairs(g, k, variant)

    def test_unsigned_mode(self, kern):
        g, _ = CORPUS[0]
        indptr, nbr = g.csr()[:2]
        got = sorted(map(tuple, kern.exact_distance_pairs(
            indptr, nbr, None, 2, 0).tolist()))
        assert got == oracles.brute_exact_distance_pairs(g, 2, "exact")


class TestWreach:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_matches_oracle(self, kern, k):
        for g, L in CORPUS:
            indptr, nbr = g.csr()[:2]
            sets = kern.wreach_all(indptr, nbr, L.pos_array(), k)
            for y in range(g.n):
                got = sets[y].tolist()
                assert got == sorted(got)
                assert got == oracles.brute_wreach(g.underlying(), L, k, y)


class TestFilteredBall:
    def test_restricted_distances(self, kern):
        g, L = CORPUS[1]
        indptr, nbr = g.csr()[:2]
        labels = L.pos_array()
        for source in range(g.n):
            for depth in (1, 2, 3):
                cut = int(labels[source])
                got = kern.filtered_ball(indptr, nbr, labels, cut, source, depth)
                allowed = {v for v in range(g.n) if labels[v] >= cut}
                reach = {source}
                frontier = {source}
                for _ in range(depth):
                    frontier = {w for u in frontier
                                for w in g.neighbours(u)
                                if w in allowed and w not in reach}
                    reach |= frontier
                assert got.tolist() == sorted(reach)

    def test_source_must_qualify(self):
        g, L = CORPUS[1]
        indptr, nbr = g.csr()[:2]
        labels = L.pos_array()
        source = int(np.argmin(labels))
        with pytest.raises(AssertionError):
            pure.filtered_ball(indptr, nbr, labels, int(labels.max()), source, 2)


class TestDreach:
    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_matches_oracle(self, kern, k):
        for g, L in CORPUS:
            indptr, nbr = g.csr()[:2]
            sets, fallback = kern.dreach_all(indptr, nbr, L.pos_array(), k,
                                             10 ** 7)
            assert not fallback.any()
            for y in range(g.n):
                assert sets[y].tolist() == oracles.brute_dreach(
                    g.underlying(), L, k, y), (k, y)

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_layered_agrees(self, k):
        for g, L in CORPUS:
            indptr, nbr = g.csr()[:2]
            pos = L.pos_array()
            enum, _ = pure.dreach_all(indptr, nbr, pos, k, 10 ** 7)
            layered = pure.dreach_all_layered(indptr, nbr, pos, k)
            for y in range(g.n):
                assert enum[y].tolist() == layered[y].tolist(), (k, y)

    def test_budget_overrun_falls_back_exactly(self, kern):
        g, L = CORPUS[0]
        indptr, nbr = g.csr()[:2]
        sets, fallback = kern.dreach_all(indptr, nbr, L.pos_array(), 4, 1)
        assert fallback.any()
        for y in range(g.n):
            assert sets[y].tolist() == oracles.brute_dreach(
                g.underlying(), L, 4, y)

    def test_radius_one_is_smaller_neighbours(self, kern):
        g, L = CORPUS[2]
        indptr, nbr = g.csr()[:2]
        pos = L.pos_array()
        sets, _ = kern.dreach_all(indptr, nbr, pos, 1, 10 ** 6)
        for y in range(g.n):
            want = sorted({y} | {v for v in g.neighbours(y)
                                 if pos[v] < pos[y]})
            assert sets[y].tolist() == want

    def test_radius_two_is_wreach(self, kern):
        for g, L in CORPUS:
            indptr, nbr = g.csr()[:2]
            pos = L.pos_array()
            sets, _ = kern.dreach_all(indptr, nbr, pos, 2, 10 ** 6)
            wsets = kern.wreach_all(indptr, nbr, pos, 2)
            for y in range(g.n):
                assert sets[y].tolist() == wsets[y].tolist()


@pytest.mark.skipif(_cext is None, reason="compiled backend not built")
class TestBackendParity:
    def test_all_kernels_agree(self):
        for seed in range(8):
            g = seeded_signed(11, 0.3, 900 + seed)
            L = seeded_ordering(11, 950 + seed)
            indptr, nbr, esign = g.csr()
            pos = L.pos_array()
            for s in range(g.n):
                assert (pure.bfs_all_dists(indptr, nbr, s)
                        == _cext.bfs_all_dists(indptr, nbr, s)).all()
            for mode in (0, 1, 2):
                es = None if mode == 0 else esign
                a = pure.exact_distance_pairs(indptr, nbr, es, 3, mode)
                b = _cext.exact_distance_pairs(indptr, nbr, es, 3, mode)
                assert a.tolist() == b.tolist()
            for k in (1, 2, 3, 4):
                wa = pure.wreach_all(indptr, nbr, pos, k)
                wb = _cext.wreach_all(indptr, nbr, pos, k)
                assert [x.tolist() for x in wa] == [x.tolist() for x in wb]
                da, fa = pure.dreach_all(indptr, nbr, pos, k, 10 ** 6)
                db, fb = _cext.dreach_all(indptr, nbr, pos, k, 10 ** 6)
                assert [x.tolist() for x in da] == [x.tolist() for x in db]
                assert fa.tolist() == fb.tolist()
            labels = pos
            for v in range(g.n):
                fa = pure.filtered_ball(indptr, nbr, labels, int(labels[v]), v, 3)
                fb = _cext.filtered_ball(indptr, nbr, labels, int(labels[v]), v, 3)
                assert fa.tolist() == fb.tolist()
