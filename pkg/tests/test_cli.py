"""Command-line driver: reports, exit codes, determinism, pipelines."""

import json
import random

import pytest

from sgcol import cli
from sgcol.formats import signed_to_text
from sgcol.planar import load_triangulation
from sgcol.sgraph import NEGATIVE, POSITIVE, SignedGraph


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    lines = out.splitlines()
    split = next(i for i, l in enumerate(lines) if l.startswith("sgcol "))
    report = json.loads("\n".join(lines[:split]))
    return code, report, lines[split:]


class TestGen:
    def test_snk(self, capsys):
        code, rep, human = run(capsys, ["gen", "snk", "5", "3"])
        assert code == 0 and rep["passed"]
        assert rep["results"]["n"] == 25
        assert rep["results"]["kind"] == "signed"
        assert rep["results"]["output"].startswith("p sg 25 ")
        assert human[0] == "sgcol gen: PASS"

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "k7.sg"
        code, rep, _ = run(capsys, ["gen", "k7_gadget", "--out", str(target)])
        assert code == 0
        assert str(target) in rep["outputs"]
        assert target.read_text().startswith("p sg 7 10")

    def test_dot_format(self, capsys):
        code, rep, _ = run(capsys, ["gen", "k7_gadget", "--format", "dot"])
        assert code == 0
        assert rep["results"]["output"].startswith("graph G {")

    def test_triangulation(self, capsys):
        code, rep, _ = run(capsys, ["gen", "apollonian", "2"])
        assert code == 0
        assert rep["results"]["kind"] == "triangulation"
        t = load_triangulation(rep["results"]["output"])
        assert t.n == 16

    def test_deterministic_reports(self, capsys):
        argv = ["gen", "apollonian", "10", "--seed", "4"]
        code1, rep1, human1 = run(capsys, argv)
        code2, rep2, human2 = run(capsys, argv)
        rep1.pop("elapsed_ms")
        rep2.pop("elapsed_ms")
        assert (code1, rep1, human1) == (code2, rep2, human2)

    def test_bad_params(self, capsys):
        code, rep, _ = run(capsys, ["gen", "snk", "1", "2"])
        assert code == 1 and not rep["passed"]
        assert rep["results"]["error_kind"] == "ValueError"


class TestExactDist:
    def test_k7_strong_square(self, capsys, tmp_path):
        src = tmp_path / "k7.sg"
        run(capsys, ["gen", "k7_gadget", "--out", str(src)])
        code, rep, _ = run(capsys, ["exactdist", str(src), "-k", "2",
                                    "--variant", "some_negative"])
        assert code == 0
        res = rep["results"]
        assert (res["n"], res["m_in"], res["m_out"]) == (7, 10, 11)
        assert res["output"].startswith("p edge 7 11")
        assert str(src) in rep["inputs"]

    def test_parse_error(self, capsys, tmp_path):
        src = tmp_path / "junk.sg"
        src.write_text("not an edge list\n")
        code, rep, _ = run(capsys, ["exactdist", str(src), "-k", "2"])
        assert code == 1
        assert rep["results"]["error_kind"] == "FormatError"
        assert "line 1" in rep["results"]["error"]

    def test_missing_file(self, capsys, tmp_path):
        code, rep, _ = run(capsys, ["exactdist", str(tmp_path / "no.sg"), "-k", "2"])
        assert code == 1
        assert rep["results"]["error_kind"] == "FileNotFoundError"


class TestColnum:
    def p4(self, tmp_path):
        g = SignedGraph(4)
        for i in range(3):
            g.add_edge(i, i + 1, POSITIVE)
        src = tmp_path / "p4.sg"
        src.write_text(signed_to_text(g))
        return src

    def test_exhaustive_wcol2(self, capsys, tmp_path):
        src = self.p4(tmp_path)
        code, rep, _ = run(capsys, ["colnum", str(src), "--kind", "wcol",
                                    "-k", "2", "--exhaustive"])
        assert code == 0
        assert rep["results"]["value"] == 3
        assert sorted(rep["results"]["ordering"]) == [1, 2, 3, 4]

    def test_given_ordering(self, capsys, tmp_path):
        src = self.p4(tmp_path)
        ordering = tmp_path / "ord.txt"
        ordering.write_text("1\n2\n3\n4\n")
        code, rep, _ = run(capsys, ["colnum", str(src), "--kind", "wcol",
                                    "-k", "2", "--ordering", str(ordering)])
        assert code == 0
        assert rep["results"]["value"] == 3
        assert rep["results"]["method"] == "given-ordering"

    def test_infinite_radius(self, capsys, tmp_path):
        src = self.p4(tmp_path)
        code, rep, _ = run(capsys, ["colnum", str(src), "--kind", "col",
                                    "-k", "inf", "--heuristic"])
        assert code == 0
        assert rep["results"]["value"] >= 2

    def test_distance_rejects_inf(self, capsys, tmp_path):
        src = self.p4(tmp_path)
        code, rep, _ = run(capsys, ["colnum", str(src), "--kind", "dcol",
                                    "-k", "inf", "--heuristic"])
        assert code == 1
        assert rep["results"]["error_kind"] == "ValueError"


class TestColor:
    def test_tw2(self, capsys, tmp_path):
        src = tmp_path / "t.sg"
        run(capsys, ["gen", "signed_2tree", "12", "--seed", "3",
                     "--out", str(src)])
        code, rep, _ = run(capsys, ["color", str(src), "--tw2"])
        assert code == 0
        assert rep["results"]["proper"]
        assert rep["results"]["palette_size"] == 7

    def test_tw2_rejects_k4(self, capsys, tmp_path):
        g = SignedGraph(4)
        for u in range(4):
            for v in range(u + 1, 4):
                g.add_edge(u, v, POSITIVE)
        src = tmp_path / "k4.sg"
        src.write_text(signed_to_text(g))
        code, rep, _ = run(capsys, ["color", str(src), "--tw2"])
        assert code == 1
        assert rep["results"]["error_kind"] == "NotTwoTreeError"

    def test_mode_required(self, capsys, tmp_path):
        src = tmp_path / "t.sg"
        run(capsys, ["gen", "signed_2tree", "8", "--out", str(src)])
        code, rep, _ = run(capsys, ["color", str(src)])
        assert code == 1
        assert "exactly one" in rep["results"]["error"]

    def test_col2(self, capsys, tmp_path):
        src = tmp_path / "g.sg"
        run(capsys, ["gen", "random_signed", "18", "0.3", "--seed", "5",
                     "--out", str(src)])
        code, rep, _ = run(capsys, ["color", str(src), "--col2"])
        assert code == 0 and rep["results"]["proper"]


class TestPlanarPipeline:
    def test_reduce_audit_color(self, capsys, tmp_path):
        rot = tmp_path / "rot.json"
        code, rep, _ = run(capsys, ["gen", "apollonian", "40", "--seed", "2",
                                    "--out", str(rot)])
        assert code == 0

        red = tmp_path / "red.json"
        ordering = tmp_path / "ord.txt"
        code, rep, _ = run(capsys, ["reduce", str(rot), "--out", str(red),
                                    "--ordering-out", str(ordering)])
        assert code == 0
        assert rep["results"]["violations"] == []
        assert json.loads(red.read_text())["n"] == 44
        assert len(ordering.read_text().split()) == 44

        code, rep, human = run(capsys, ["audit", str(rot)])
        assert code == 0
        assert rep["results"]["passed"]
        assert rep["results"]["max_size"] <= 76
        assert any("max |DReach_4|" in l for l in human)

        t = load_triangulation(rot.read_text())
        rng = random.Random(0)
        sg = SignedGraph(t.n)
        for u, v in t.graph().edges():
            sg.add_edge(u, v, NEGATIVE if rng.getrandbits(1) else POSITIVE)
        signed = tmp_path / "t.sg"
        signed.write_text(signed_to_text(sg))
        code, rep, _ = run(capsys, ["color", str(signed), "--dcol", "-k", "2",
                                    "--ordering", str(ordering)])
        assert code == 0
        assert rep["results"]["proper"]
        assert rep["results"]["distinct_colours"] <= 76

    def test_audit_budget_flag(self, capsys, tmp_path):
        rot = tmp_path / "rot.json"
        run(capsys, ["gen", "apollonian", "6", "--seed", "1", "--out", str(rot)])
        code, rep, _ = run(capsys, ["audit", str(rot), "--budget-ms", "500"])
        assert code == 0
        assert rep["parameters"]["budget"] == 500 * cli.STEPS_PER_MS


class TestVerifyCommand:
    def test_tw2_suite(self, capsys):
        code, rep, human = run(capsys, ["verify", "tw2", "--count", "4",
                                        "--seed", "1"])
        assert code == 0
        assert rep["results"]["passed"]
        assert len(rep["results"]["checks"]) == 4
        assert human[1].startswith("  suite tw2: 4/4")

    def test_unknown_suite_rejected(self, capsys):
        with pytest.raises(SystemExit):
            cli.main(["verify", "nonsense"])


class TestMisc:
    def test_export_dot(self, capsys, tmp_path):
        src = tmp_path / "g.sg"
        run(capsys, ["gen", "k7_gadget", "--out", str(src)])
        code, rep, _ = run(capsys, ["export-dot", str(src)])
        assert code == 0
        assert 'sign="-"' in rep["results"]["output"]

    def test_jobs_validated(self, capsys):
        assert cli.main(["gen", "k7_gadget", "--jobs", "0"]) == 2

    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as e:
            cli.main(["--version"])
        assert e.value.code == 0
