"""Serialization round trips and parse-error reporting."""

import json
import random

import pytest

from sgcol.colorers import Colouring
from sgcol.families import gen_apollonian, gen_random_signed
from sgcol.formats import (FormatError, assignment_to_text, audit_table,
                           colouring_to_json, colouring_to_text,
                           graph_from_text, graph_to_dot, graph_to_text,
                           ordering_from_text, ordering_to_text,
                           reduction_to_json, signed_from_text, signed_to_dot,
                           signed_to_text, triangulation_to_json)
from sgcol.orderings import VertexOrdering
from sgcol.planar import audit_dr4, build_reduction, load_triangulation
from sgcol.sgraph import NEGATIVE, POSITIVE, SignedGraph
from sgcol.twotrees import Assignment733


class TestSignedText:
    def test_round_trip(self):
        g = gen_random_signed(12, 0.4, 3)
        back = signed_from_text(signed_to_text(g))
        assert back.n == g.n and list(back.edges()) == list(g.edges())

    def test_comments_and_blanks(self):
        text = "c header\n\np sg 2 1\nc middle\ne 1 2 -\n\n"
        g = signed_from_text(text)
        assert g.m == 1 and g.sign(0, 1) == NEGATIVE

    @pytest.mark.parametrize("text,where", [
        ("e 1 2 +\n", "line 1"),
        ("p sg 2 1\np sg 2 1\n", "line 2"),
        ("p edge 2 1\ne 1 2 +\n", "line 1"),
        ("p sg x 1\n", "line 1"),
        ("p sg 2 1\ne 1 2 *\n", "line 2"),
        ("p sg 2 1\ne 1 two -\n", "line 2"),
        ("p sg 2 1\nq 1 2\n", "line 2"),
        ("p sg 2 1\ne 1 2 +\ne 1 2 -\n", "line 3"),
        ("p sg 3 1\ne 1 9 +\n", "line 2"),
    ])
    def test_errors_carry_line_numbers(self, text, where):
        with pytest.raises(FormatError, match=where):
            signed_from_text(text)

    def test_declared_count_checked(self):
        with pytest.raises(FormatError, match="declares 2 edges, found 1"):
            signed_from_text("p sg 3 2\ne 1 2 +\n")

    def test_missing_problem_line(self):
        with pytest.raises(FormatError, match="missing problem line"):
            signed_from_text("c nothing else\n")


class TestGraphText:
    def test_round_trip(self):
        g = gen_random_signed(10, 0.5, 9).underlying()
        back = graph_from_text(graph_to_text(g))
        assert back.n == g.n and list(back.edges()) == list(g.edges())

    def test_errors(self):
        with pytest.raises(FormatError, match="line 2"):
            graph_from_text("p edge 3 1\ne 1 2 3 4\n")
        with pytest.raises(FormatError, match="declares 3"):
            graph_from_text("p edge 3 3\ne 1 2\n")


class TestOrderingText:
    def test_round_trip(self):
        L = VertexOrdering([3, 0, 2, 1])
        assert ordering_from_text(ordering_to_text(L)) == L

    def test_length_check(self):
        text = ordering_to_text(VertexOrdering([1, 0]))
        assert ordering_from_text(text, n=2) == VertexOrdering([1, 0])
        with pytest.raises(FormatError, match="expected 3"):
            ordering_from_text(text, n=3)

    def test_errors(self):
        with pytest.raises(FormatError, match="line 2"):
            ordering_from_text("1\n2 3\n")
        with pytest.raises(FormatError, match="line 2"):
            ordering_from_text("1\nx\n")
        with pytest.raises(FormatError):
            ordering_from_text("1\n1\n")


class TestDot:
    def test_signed(self):
        g = SignedGraph(2)
        g.add_edge(0, 1, NEGATIVE)
        dot = signed_to_dot(g, name="H")
        assert "graph H {" in dot
        assert '1 -- 2 [sign="-"];' in dot

    def test_unsigned(self):
        g = gen_random_signed(5, 1.0, 0).underlying()
        dot = graph_to_dot(g)
        assert dot.count(" -- ") == 10


class TestTriangulationJson:
    def test_round_trip(self):
        t = gen_apollonian(8, seed=4)
        back = load_triangulation(triangulation_to_json(t))
        assert back.rot == t.rot and back.outer == t.outer


class TestReductionJson:
    def test_document_shape(self):
        t = gen_apollonian(2)
        r = build_reduction(t)
        doc = json.loads(reduction_to_json(r))
        assert doc["n"] == t.n
        assert doc["paths"] == [[v + 1 for v in p] for p in r.paths]
        assert doc["ordering"] == [v + 1 for p in r.paths for v in p]
        assert doc["metadata"][0] is None and doc["metadata"][1] is None
        meta = r.metas[2]
        got = doc["metadata"][2]
        assert got["anchor1"] == [v + 1 for v in meta.anchor1]
        assert got["arc_manager"] == [v + 1 for v in meta.arc_manager]
        assert (got["manager"], got["foreman"]) == (meta.manager, meta.foreman)


class TestColouringOutput:
    def test_json(self):
        col = Colouring({0: 2, 1: 0}, 3)
        doc = json.loads(colouring_to_json(col))
        assert doc == {"palette_size": 3, "colours": {"1": 2, "2": 0}}

    def test_json_non_integer_colours(self):
        col = Colouring({0: (1, 0), 1: (0, 1)}, 9)
        doc = json.loads(colouring_to_json(col))
        assert doc["colours"]["1"] == repr((1, 0))

    def test_text(self):
        col = Colouring({1: 0, 0: 5}, 6)
        assert colouring_to_text(col) == "1 5\n2 0\n"


class TestAssignmentText:
    def test_lines(self):
        asg = Assignment733({0: (1, frozenset({2, 3, 4}), frozenset({5, 6, 7}))})
        assert assignment_to_text(asg) == "1: 1 | 2 3 4 | 5 6 7\n"


class TestAuditTable:
    def test_pass_table(self):
        t = gen_apollonian(1)
        r = build_reduction(t)
        table = audit_table(audit_dr4(t, r))
        assert "max |DReach_4|" in table
        assert "verdict             PASS" in table
        assert "size histogram:" in table

    def test_violations_listed(self):
        t = gen_apollonian(1)
        r = build_reduction(t)
        rep = audit_dr4(t, r)
        rep.passed = False
        rep.path_overlap_violations = [{"vertex": 3, "path": 2, "overlap": 11}]
        table = audit_table(rep)
        assert "FAIL" in table
        assert "vertex 3 path 2 overlap 11" in table
