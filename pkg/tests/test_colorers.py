"""Colorers: properness on exact-distance graphs and palette arithmetic."""

import random

import pytest

import oracles
from sgcol.colorers import (ChromaticBoundsOnly, Colouring, VectorColour,
                            chromatic_number, chromatic_number_exact,
                            colour_exact_distance_via_dcol,
                            colour_exact_distance_via_wcolk,
                            colour_strong_square_via_col2)
from sgcol.orderings import VertexOrdering, degeneracy_ordering, dreach_sets
from sgcol.sgraph import (NEGATIVE, POSITIVE, Graph, SignedGraph,
                          exact_distance_graph)


def seeded_signed(n, p, seed):
    rng = random.Random(seed)
    g = SignedGraph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v, POSITIVE if rng.random() < 0.5 else NEGATIVE)
    return g


CORPUS = [seeded_signed(9, 0.35, s) for s in range(6)]


def assert_proper(col, graph):
    for edge in graph.edges():
        u, v = edge[0], edge[1]
        assert col[u] != col[v], (u, v)


class TestColouring:
    def test_validation(self):
        with pytest.raises(ValueError):
            Colouring({0: 3}, 3)
        with pytest.raises(ValueError):
            Colouring({0: -1}, 3)
        c = Colouring({0: 0, 1: 2, 2: 0}, 3)
        assert c[1] == 2
        assert c.distinct_count() == 2

    def test_vector_colour(self):
        with pytest.raises(ValueError):
            VectorColour((1,), (1, 2), (1,))
        v = VectorColour((1, "*"), (2, "*"), (1, "*"))
        assert v == VectorColour((1, "*"), (2, "*"), (1, "*"))


class TestDcolColorer:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_proper(self, k):
        for i, g in enumerate(CORPUS):
            L = degeneracy_ordering(g.underlying())
            col = colour_exact_distance_via_dcol(g, k, L)
            assert_proper(col, exact_distance_graph(g, k, "every_negative"))

    def test_palette_is_dcol_value(self):
        g = CORPUS[0]
        und = g.underlying()
        L = degeneracy_ordering(und)
        for k, r in ((1, 1), (2, 4), (3, 5)):
            col = colour_exact_distance_via_dcol(g, k, L)
            brute = max(len(oracles.brute_dreach(und, L, r, y))
                        for y in range(g.n))
            assert col.palette_size == max(brute, 1)

    def test_profile_reuse_across_signatures(self):
        base = CORPUS[1].underlying()
        L = degeneracy_ordering(base)
        prof = dreach_sets(base, L, 4)
        for seed in range(4):
            rng = random.Random(seed)
            sg = SignedGraph(base.n)
            for u, v in base.edges():
                sg.add_edge(u, v, NEGATIVE if rng.getrandbits(1) else POSITIVE)
            col = colour_exact_distance_via_dcol(sg, 2, L, dcol_profile=prof)
            assert_proper(col, exact_distance_graph(sg, 2, "every_negative"))

    def test_profile_mismatch_rejected(self):
        g = CORPUS[1]
        und = g.underlying()
        L = degeneracy_ordering(und)
        wrong_k = dreach_sets(und, L, 3)
        with pytest.raises(ValueError):
            colour_exact_distance_via_dcol(g, 2, L, dcol_profile=wrong_k)
        other = VertexOrdering(list(reversed(range(g.n))))
        wrong_L = dreach_sets(und, other, 4)
        with pytest.raises(ValueError):
            colour_exact_distance_via_dcol(g, 2, L, dcol_profile=wrong_L)

    def test_bad_k(self):
        with pytest.raises(ValueError):
            colour_exact_distance_via_dcol(CORPUS[0], 0, VertexOrdering.identity(9))

    def test_isolated_vertices(self):
        g = SignedGraph(3)
        g.add_edge(0, 1, NEGATIVE)
        col = colour_exact_distance_via_dcol(g, 1, VertexOrdering.identity(3))
        assert col[0] != col[1]
        assert col.palette_size >= 1


class TestWcolkColorer:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_proper(self, k):
        for g in CORPUS:
            L = degeneracy_ordering(g.underlying())
            col = colour_exact_distance_via_wcolk(g, k, L)
            assert_proper(col, exact_distance_graph(g, k, "every_negative"))

    def test_palette_formula_and_shape(self):
        g = CORPUS[2]
        und = g.underlying()
        L = degeneracy_ordering(und)
        k = 3
        col = colour_exact_distance_via_wcolk(g, k, L)
        wk = max(len(oracles.brute_wreach(und, L, k, y)) for y in range(g.n))
        width = max(len(oracles.brute_wreach(und, L, 1, y)) for y in range(g.n))
        assert col.palette_size == ((wk + 1) * 3 * 3) ** width
        for v in range(g.n):
            assert isinstance(col[v], VectorColour)
            assert len(col[v].alpha) == width

    def test_bad_k(self):
        with pytest.raises(ValueError):
            colour_exact_distance_via_wcolk(CORPUS[0], 0, VertexOrdering.identity(9))


class TestCol2Colorer:
    def test_proper(self):
        for g in CORPUS:
            L = degeneracy_ordering(g.underlying())
            col = colour_strong_square_via_col2(g, L)
            assert_proper(col, exact_distance_graph(g, 2, "some_negative"))

    def test_palette_formula(self):
        g = CORPUS[3]
        und = g.underlying()
        L = degeneracy_ordering(und)
        col = colour_strong_square_via_col2(g, L)
        p = max(len(oracles.brute_reach(und, L, 2, y)) for y in range(g.n))
        assert col.palette_size == p * p * 2 ** p
        vec, b = col[0]
        assert len(vec) == p and isinstance(b, int)


def petersen():
    g = Graph(10)
    for i in range(5):
        g.add_edge(i, (i + 1) % 5)
        g.add_edge(i, i + 5)
        g.add_edge(i + 5, 5 + (i + 2) % 5)
    return g


class TestChromatic:
    def test_knowns(self):
        k5 = Graph.from_edges(5, [(a, b) for a in range(5) for b in range(a + 1, 5)])
        assert chromatic_number_exact(k5) == 5
        c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
        assert chromatic_number_exact(c5) == 3
        k33 = Graph.from_edges(6, [(a, b + 3) for a in range(3) for b in range(3)])
        assert chromatic_number_exact(k33) == 2
        assert chromatic_number_exact(petersen()) == 3
        assert chromatic_number_exact(Graph(0)) == 0
        assert chromatic_number_exact(Graph(4)) == 1

    def test_colouring_returned_is_proper(self):
        g = petersen()
        res = chromatic_number(g)
        assert res.exact
        for u, v in g.edges():
            assert res.colouring[u] != res.colouring[v]

    def test_matches_brute(self):
        for seed in range(8):
            g = seeded_signed(7 + seed % 3, 0.45, 40 + seed).underlying()
            assert chromatic_number_exact(g) == oracles.brute_chromatic(g)

    def test_bounds_only(self):
        c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
        res = chromatic_number(c5, node_budget=0)
        assert (res.lower, res.upper) == (2, 3) and not res.exact
        with pytest.raises(ChromaticBoundsOnly) as info:
            chromatic_number_exact(c5, node_budget=0)
        assert (info.value.lower, info.value.upper) == (2, 3)

    def test_cap_skips_search(self):
        c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
        res = chromatic_number(c5, cap=3)
        assert (res.lower, res.upper) == (2, 3)
