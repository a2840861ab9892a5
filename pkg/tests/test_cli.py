from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from arcanon.circular import rows_circular
from arcanon.cli import main
from arcanon.io import parse_graph

C5 = "graph 5\n1 2\n2 3\n3 4\n4 5\n5 1\n"
C6 = "graph 6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n"
N_C5 = "hypergraph 5\n5 1 2\n1 2 3\n2 3 4\n3 4 5\n4 5 1\n"
CLAW = "graph 4\n1 2\n1 3\n1 4\n"
CYCLIC = "110\n011\n101\n"


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_recognize(capsys, files):
    code, out, _ = run(capsys, "recognize", files("c5.g", C5))
    assert code == 0
    assert out == "PCA\nTCA\n"


def test_canon_graph_and_hypergraph(capsys, files):
    code, out, _ = run(capsys, "canon", files("c5.g", C5))
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("form 5 ")
    assert len(lines) == 6
    code, out, _ = run(capsys, "canon", "--kind", "hypergraph", files("n.h", N_C5))
    assert code == 0 and out.startswith("form arc 5|")


def test_canon_kind_mismatch_is_error(capsys, files):
    code, _, err = run(capsys, "canon", "--kind", "graph", files("n.h", N_C5))
    assert code == 2 and err.startswith("error:")


def test_model_proper(capsys, files):
    code, out, _ = run(capsys, "model", "--proper", files("c5.g", C5))
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("circle ")
    assert len(lines) == 6


def test_model_proper_fails_outside_class(capsys, files):
    code, _, err = run(capsys, "model", "--proper", files("claw.g", CLAW))
    assert code == 2 and "PCA" in err


def test_model_interval_graph_fallback(capsys, files):
    code, out, _ = run(capsys, "model", files("claw.g", CLAW))
    assert code == 0 and out.startswith("segment ")


def test_iso(capsys, files):
    code, out, _ = run(capsys, "iso", files("a.g", C5), files("b.g", C6))
    assert code == 1 and out == "NOT-ISOMORPHIC\n"
    rot = "graph 5\n2 3\n3 4\n4 5\n5 1\n1 2\n"
    code, out, _ = run(capsys, "iso", files("a.g", C5), files("c.g", rot))
    assert code == 0 and out.startswith("ISOMORPHIC\n")


def test_ssp(capsys, files):
    code, out, _ = run(capsys, "ssp", files("n.h", N_C5))
    assert code == 0
    assert parse_graph(out) == parse_graph(C5)


def test_ssp_no_solution(capsys, files):
    code, out, _ = run(capsys, "ssp", files("t.h", "hypergraph 3\n1 2\n1 2 3\n"))
    assert code == 1 and out == "NO-SOLUTION\n"


def test_ssp_class_restriction(capsys, files):
    code, out, _ = run(capsys, "ssp", "--class", "ProperInterval", files("n.h", N_C5))
    assert code == 1 and out == "NO-SOLUTION\n"


def test_circular_ones(capsys, files):
    m = files("m.txt", CYCLIC)
    code, out, _ = run(capsys, "circ-ones", m)
    assert code == 0
    perm = [int(t) for t in out.split()]
    assert rows_circular([[1, 1, 0], [0, 1, 1], [1, 0, 1]], perm)
    code, out, _ = run(capsys, "cons-ones", m)
    assert code == 1 and out == "NO\n"


def test_parse_error_exit_code(capsys, files):
    code, _, err = run(capsys, "recognize", files("bad.g", "graph 2\n1 3\n"))
    assert code == 2 and "line 2, col 3" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "recognize", str(tmp_path / "absent"))
    assert code == 2 and "cannot read" in err


def test_json_mode(capsys, files):
    code, out, _ = run(capsys, "ssp", "--json", files("n.h", N_C5))
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "ok" and len(doc["result"]) == 5
    code, out, _ = run(capsys, "iso", "--json", files("a.g", C5), files("b.g", C6))
    assert code == 1 and json.loads(out) == {"status": "negative", "result": False, "labeling": None}
    code, out, _ = run(capsys, "canon", "--json", files("c5.g", C5))
    doc = json.loads(out)
    assert sorted(p for _, p in doc["labeling"]) == [1, 2, 3, 4, 5]
    code, out, _ = run(capsys, "recognize", "--json", files("bad.g", "graph x\n"))
    assert code == 2 and json.loads(out)["status"] == "error"


def test_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(C5))
    code, out, _ = run(capsys, "recognize", "-")
    assert code == 0 and out == "PCA\nTCA\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["canon", "c5.g"],
        ["model", "--proper", "c5.g"],
        ["ssp", "n.h"],
        ["iso", "c5.g", "c5.g"],
        ["canon", "--json", "n.h"],
    ],
)
def test_output_is_byte_deterministic(tmp_path, argv):
    (tmp_path / "c5.g").write_text(C5)
    (tmp_path / "n.h").write_text(N_C5)
    outs = set()
    for seed in ("0", "1", "2"):
        res = subprocess.run(
            [sys.executable, "-m", "arcanon", *argv],
            cwd=tmp_path,
            capture_output=True,
            env={"PYTHONHASHSEED": seed, "PATH": "/usr/bin:/bin"},
        )
        assert res.returncode == 0, res.stderr
        outs.add(res.stdout)
    assert len(outs) == 1
