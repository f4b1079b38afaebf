import json
import subprocess
import sys
from fractions import Fraction

import pytest

from conftest import DATA, EXAMPLE9_36H
from unicyclic_pinv.cli import main
from unicyclic_pinv.exact_arith import RationalMatrix, matrix_from_csv, matrix_from_json, matrix_to_json
from unicyclic_pinv.graph_core import parse_graph

FIG1 = str(DATA / "example9.txt")
TRI = str(DATA / "triangle.txt")
PATH3 = str(DATA / "path3.txt")
C4 = str(DATA / "c4.txt")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestClassify:
    @pytest.mark.parametrize(
        "path, line",
        [
            (FIG1, "EvenUnicyclic n=9 m=9 |C|=4"),
            (TRI, "OddUnicyclic n=3 m=3 |C|=3"),
            (PATH3, "Tree n=3 m=2"),
        ],
    )
    def test_lines(self, capsys, path, line):
        code, out, _ = run(capsys, "classify", "--input", path)
        assert code == 0 and out.strip() == line

    def test_parse_error_exit(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("2 1\n1 1\n")
        code, _, err = run(capsys, "classify", "--input", str(bad))
        assert code == 1 and "self-loop" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "classify", "--input", str(tmp_path / "nope"))
        assert code == 1 and "cannot read" in err

    def test_stdin(self):
        proc = subprocess.run(
            [sys.executable, "-m", "unicyclic_pinv", "classify", "--input", "-"],
            input="3 3\n1 2\n2 3\n1 3\n", capture_output=True, text=True,
        )
        assert proc.returncode == 0 and proc.stdout.strip() == "OddUnicyclic n=3 m=3 |C|=3"

    def test_usage_error_is_2(self):
        proc = subprocess.run([sys.executable, "-m", "unicyclic_pinv", "frobnicate"], capture_output=True)
        assert proc.returncode == 2


class TestPinv:
    def test_example9_csv(self, capsys):
        code, out, _ = run(capsys, "pinv", "--input", FIG1, "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "edge\\vertex," + ",".join(f"v{j}" for j in range(1, 10))
        assert [ln.split(",")[0] for ln in lines[1:]] == [f"e{i}" for i in range(1, 10)]
        h = matrix_from_csv(out)
        assert [[int(x * 36) for x in row] for row in h.entries] == EXAMPLE9_36H

    def test_triangle_json(self, capsys):
        code, out, _ = run(capsys, "pinv", "--input", TRI, "--format", "json")
        doc = json.loads(out)
        assert code == 0 and doc["class"] == "OddUnicyclic"
        h = matrix_from_json(doc["h"])
        assert {abs(x) for row in h.entries for x in row} == {Fraction(1, 2)}

    def test_tree_rejected(self, capsys):
        code, out, err = run(capsys, "pinv", "--input", PATH3)
        assert code == 1 and out == "" and "Tree" in err

    def test_emit_several(self, capsys, tmp_path):
        dest = tmp_path / "out.json"
        code, _, _ = run(capsys, "pinv", "--input", FIG1, "--format", "json",
                         "--emit", "h", "--emit", "mh", "--emit", "hm", "--emit", "qplus", "--emit", "splus",
                         "--out", str(dest))
        doc = json.loads(dest.read_text())
        assert code == 0
        assert set(doc) >= {"h", "mh", "hm", "qplus", "splus", "provenance"}
        assert matrix_from_json(doc["hm"])[5, 5] == Fraction(3, 4)
        assert matrix_from_json(doc["mh"])[0, 0] == Fraction(8, 9)

    def test_emit_csv_sections(self, capsys):
        code, out, _ = run(capsys, "pinv", "--input", C4, "--emit", "h", "--emit", "mh")
        assert code == 0
        assert out.count("# h\n") == 1 and out.count("# mh\n") == 1

    def test_odd_hm_metadata(self, capsys):
        code, out, _ = run(capsys, "pinv", "--input", TRI, "--format", "json", "--emit", "hm")
        doc = json.loads(out)
        assert code == 0 and "invertible" in doc["hm_note"]
        assert matrix_from_json(doc["hm"]) == RationalMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


class TestVerify:
    @pytest.mark.parametrize("path", [FIG1, C4, TRI])
    def test_passes(self, capsys, path):
        code, out, _ = run(capsys, "verify", "--input", path)
        doc = json.loads(out)
        assert code == 0 and doc["passed"]
        assert doc["witness"] is None
        assert all(doc[f"axiom{k}"] for k in range(1, 5))

    def test_c4_first_row(self, capsys):
        code, out, _ = run(capsys, "pinv", "--input", C4)
        h = matrix_from_csv(out)
        assert h.row(0) == [Fraction(3, 8), Fraction(3, 8), Fraction(-1, 8), Fraction(-1, 8)]

    def test_mutated_candidate(self, capsys, tmp_path):
        ents = [[Fraction(v, 36) for v in row] for row in EXAMPLE9_36H]
        ents[5][6] += Fraction(1, 36)
        cand = tmp_path / "h.json"
        cand.write_text(json.dumps(matrix_to_json(RationalMatrix(ents))))
        code, out, _ = run(capsys, "verify", "--input", FIG1, "--candidate", str(cand))
        doc = json.loads(out)
        assert code == 1 and not doc["passed"]
        w = doc["witness"]
        assert set(w) == {"axiom", "row", "col"} and 1 <= w["axiom"] <= 4

    def test_exact_candidate_csv(self, capsys, tmp_path):
        _, out, _ = run(capsys, "pinv", "--input", FIG1)
        cand = tmp_path / "h.csv"
        cand.write_text(out)
        code, out, _ = run(capsys, "verify", "--input", FIG1, "--candidate", str(cand))
        assert code == 0 and json.loads(out)["passed"]

    def test_wrong_shape_candidate(self, capsys, tmp_path):
        cand = tmp_path / "h.csv"
        cand.write_text("1,0\n0,1\n")
        code, _, err = run(capsys, "verify", "--input", FIG1, "--candidate", str(cand))
        assert code == 1 and "expected 9x9" in err


class TestGen:
    def test_c4(self, capsys):
        code, out, _ = run(capsys, "gen", "--n", "4", "--cycle", "4", "--seed", "1")
        g = parse_graph(out)
        assert code == 0 and g.n == 4 and g.m == 4

    def test_gen_then_classify(self, capsys, tmp_path):
        dest = tmp_path / "g.txt"
        run(capsys, "gen", "--n", "9", "--cycle", "4", "--seed", "7", "--out", str(dest))
        code, out, _ = run(capsys, "classify", "--input", str(dest))
        assert out.strip() == "EvenUnicyclic n=9 m=9 |C|=4"

    def test_impossible(self, capsys):
        code, _, err = run(capsys, "gen", "--n", "3", "--cycle", "4")
        assert code == 1 and "exceeds" in err

    def test_parity_conflict(self, capsys):
        code, _, err = run(capsys, "gen", "--n", "8", "--cycle", "5", "--parity", "even")
        assert code == 1

    def test_deterministic(self, capsys):
        _, a, _ = run(capsys, "gen", "--n", "30", "--parity", "odd", "--seed", "5")
        _, b, _ = run(capsys, "gen", "--n", "30", "--parity", "odd", "--seed", "5")
        assert a == b


class TestBench:
    def test_csv(self, capsys):
        code, out, err = run(capsys, "bench", "--sizes", "8", "12", "--seeds", "2", "--oracle-cap", "10")
        assert code == 0
        rows = [ln.split(",") for ln in out.splitlines()]
        assert rows[0] == ["n", "cycle_length", "seed", "t_combinatorial", "t_oracle", "verified"]
        assert len(rows) == 5
        assert all(r[5] == "True" for r in rows[1:])
        assert all(r[4] != "" for r in rows[1:] if r[0] == "8")
        assert all(r[4] == "" for r in rows[1:] if r[0] == "12")
        assert "n=8" in err and "ratio" in err

    def test_small_size_rejected(self, capsys):
        code, _, err = run(capsys, "bench", "--sizes", "3")
        assert code == 1
