from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from rootposet.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_text(capsys):
    code, out, _ = run(capsys, "build", "--type", "G", "--rank", "2")
    assert code == 0
    assert out.startswith("# G2: 6 positive roots")
    assert len(out.splitlines()) == 2 + 6


def test_build_json(capsys):
    code, out, _ = run(capsys, "build", "--type", "D", "--rank", "5", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and set(doc) == {"type", "rank", "roots"}
    assert (doc["type"], doc["rank"], len(doc["roots"])) == ("D", 5, 20)
    first = doc["roots"][0]
    assert set(first) == {"coeffs", "bracket", "eps", "height", "coroot_height", "long", "in_H", "commutative"}


def test_build_csv(capsys):
    code, out, _ = run(capsys, "build", "-t", "B3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 9
    assert rows[-1]["eps"] == "e1+e2"


@pytest.mark.parametrize("argv", [
    ["build", "--type", "H", "--rank", "3"],
    ["build", "--type", "E", "--rank", "9"],
    ["build", "--type", "B", "--rank", "1"],
    ["amazing", "--type", "D"],
])
def test_bad_type(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_amazing_counts(capsys):
    _, out, _ = run(capsys, "amazing", "--type", "B", "--rank", "5")
    assert "Gamma (8):" in out and "Gamma_H (5):" in out
    _, out, _ = run(capsys, "amazing", "--type", "E", "--rank", "8", "--format", "json")
    doc = json.loads(out)
    assert set(doc) == {"type", "rank", "report"}
    assert len(doc["report"]["gamma"]["roots"]) == 10
    assert len(doc["report"]["gamma_H"]["roots"]) == 9


def test_amazing_a1(capsys):
    _, out, _ = run(capsys, "amazing", "-t", "A1")
    assert "Gamma (1): e1-e2" in out and "Gamma_pr (1): e1-e2" in out


def test_hasse_d6_dot(capsys):
    code, out, _ = run(capsys, "hasse", "--type", "D", "--rank", "6", "--set", "gammaH", "--format", "dot")
    assert code == 0
    assert out.count("[label=\"e") == 7
    assert out.count(" -- ") == 6


def test_hasse_f4_augmented(capsys):
    code, out, _ = run(capsys, "hasse", "--type", "F", "--rank", "4", "--set", "augmented")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "# F4: 5 nodes, 4 edges"
    edges = [ln for ln in lines if " -- " in ln or " == " in ln]
    assert len(edges) == 4
    assert [ln for ln in edges if " == " in ln] == ["[2321] == [2421] [2]"]


def test_hasse_c3_rejected(capsys):
    code, _, err = run(capsys, "hasse", "--type", "C", "--rank", "3", "--set", "gammaH")
    assert code == 2 and "not of type A_n or C_n" in err


def test_hasse_augmented_needs_bfg(capsys):
    code, _, err = run(capsys, "hasse", "-t", "D5", "--set", "augmented")
    assert code == 2 and "B_n" in err


def test_hasse_poset_json(capsys):
    code, out, _ = run(capsys, "hasse", "-t", "A3", "--set", "poset", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["graph"]["nodes"]) == 6 and len(doc["graph"]["edges"]) == 6


def test_verify_type(capsys):
    code, out, _ = run(capsys, "verify", "--type", "D", "--rank", "5", "--suite", "criteria")
    assert code == 0 and out.rstrip().endswith("overall=PASS")


def test_verify_not_applicable(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A", "--rank", "3", "--suite", "figures", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and set(doc) == {"type", "rank", "outcome"}
    statuses = {r["status"] for r in doc["outcome"]["records"]}
    assert statuses == {"n/a"}


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--max-rank", "8")
    assert code == 0
    rows = {ln.split()[0]: ln.split() for ln in out.splitlines()[1:] if ln[:1].isalpha() and ln[1:2].isdigit()}
    assert rows["B6"][1:5] == ["10", "10", "6", "6"]
    assert rows["D7"][1:5] == ["14", "14", "8", "8"]
    assert "D5=10, E6=10, E7=10, E8=10 (constant)" in out
    assert "MISMATCH" not in out


def test_table_bound(capsys):
    assert run(capsys, "table", "--max-rank", "3")[0] == 2


def test_deterministic(capsys):
    a = run(capsys, "amazing", "-t", "E7", "--format", "json")
    b = run(capsys, "amazing", "-t", "E7", "--format", "json")
    assert a == b
    a = run(capsys, "verify", "--suite", "joins", "--max-rank", "4")
    b = run(capsys, "verify", "--suite", "joins", "--max-rank", "4")
    assert a == b


def test_report(tmp_path, capsys):
    code, out, _ = run(capsys, "report", "--max-rank", "4", "--out", str(tmp_path))
    assert code == 0
    names = {p.name for p in tmp_path.iterdir()}
    assert {"counts.csv", "counts.png", "D4_gammaH.png", "D4_gammaH.dot",
            "B3_augmented.png", "F4_augmented.png", "G2_augmented.dot"} <= names
    assert (tmp_path / "counts.png").read_bytes()[:4] == b"\x89PNG"
    assert len(out.splitlines()) == len(names)


def test_module_entry():
    res = subprocess.run([sys.executable, "-m", "rootposet", "build", "-t", "A2"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and "3 positive roots" in res.stdout
