import json
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

import corpus
from kmonopoly.cli import main
from kmonopoly.edgelist import ParseError, emit_edge_list, parse_edge_list
from kmonopoly.families import cycle


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def structured(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--format", "structured")
    return code, json.loads(out)


def test_parse_examples():
    g = parse_edge_list("3 3\n0 1\n1 2\n2 0")
    assert g.edges == ((0, 1), (0, 2), (1, 2))
    assert parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0").edges == cycle(4).edges
    with pytest.raises(ParseError, match="line 2: self-loop"):
        parse_edge_list("2 1\n0 0")


@pytest.mark.parametrize("text,msg", [
    ("", "header"),
    ("3 x\n", "non-integer"),
    ("3 2\n0 1\n", "declares 2 edges"),
    ("3 1\n0 5\n", "out of range"),
    ("3 2\n0 1\n1 0\n", "line 3: duplicate"),
    ("3 1\n0 1 2\n", "line 2: expected 2"),
])
def test_parse_errors(text, msg):
    with pytest.raises(ParseError, match=msg):
        parse_edge_list(text)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 12), st.integers(0, 10**6))
def test_round_trip(n, seed):
    g = corpus.random_connected(n, random.Random(seed))
    text = emit_edge_list(g)
    h = parse_edge_list(text)
    assert h.edges == g.edges and emit_edge_list(h) == text


def test_solve_cycle8(capsys):
    code, rep = structured(capsys, "solve", "--problem", "monopoly", "--k", "0", "--gen", "cycle:8")
    assert code == 0
    assert rep["optimum"] == 4 and rep["witness"] == [0, 1, 4, 5]
    assert list(rep)[:3] == ["command", "graph", "problem"]
    names = [b["name"] for b in rep["bounds"]]
    assert "formula:cycle" in names and "regular_lower" in names
    assert set(rep["stats"]) == {"nodes_explored", "backend"}


def test_solve_p5_note(capsys):
    code, out, _ = run_cli(capsys, "solve", "--gen", "path:5", "--k", "0")
    assert code == 0 and "optimum: 3" in out
    assert "no open 0-monopoly with two vertices" in out


def test_verify_false(capsys):
    code, rep = structured(capsys, "verify", "--problem", "monopoly", "--k", "0", "--set", "0,1",
                           "--gen", "path:5")
    assert code == 1 and rep["valid"] is False and rep["violator"] in (3, 4)
    code, rep = structured(capsys, "verify", "--k", "0", "--set", "1,2,3", "--gen", "path:5")
    assert code == 0 and rep["valid"] is True and rep["violator"] is None


def test_reduce_verify(tmp_path, capsys):
    src = tmp_path / "p3.edges"
    src.write_text("3 2\n0 1\n1 2\n")
    out, omap = tmp_path / "h.edges", tmp_path / "h.map"
    code, rep = structured(capsys, "reduce", "--in", str(src), "--verify", "--out", str(out),
                           "--origin-map", str(omap))
    assert code == 0 and (rep["lhs"], rep["rhs"], rep["equal"]) == (5, 5, True)
    assert parse_edge_list(out.read_text()).n == 8
    assert omap.read_text().splitlines()[5] == "5 path 1 0 p3"


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "loop.edges"
    bad.write_text("2 1\n0 0\n")
    code, _, err = run_cli(capsys, "solve", "--in", str(bad), "--k", "0")
    assert code == 2 and "self-loop" in err
    assert run_cli(capsys, "solve", "--gen", "cycle:8", "--k", "5")[0] == 2
    assert run_cli(capsys, "solve", "--gen", "cycle:8")[0] == 2
    assert run_cli(capsys, "solve", "--gen", "nosuch:3", "--k", "0")[0] == 2
    assert run_cli(capsys, "solve", "--in", str(tmp_path / "missing"), "--k", "0")[0] == 2
    assert run_cli(capsys, "transform", "--direction", "powerful-to-signed", "--gen", "cycle:8",
                   "--k", "0", "--set", "0,1,4,5")[0] == 1


def test_transform_and_partition(capsys):
    code, rep = structured(capsys, "transform", "--direction", "monopoly-to-signed", "--gen",
                           "complete:5", "--k", "1", "--set", "0,1,2,3")
    assert code == 0 and rep["weight"] == 3 and rep["b_minus1"] == [4]
    code, rep = structured(capsys, "transform", "--direction", "monopoly-to-signed", "--gen",
                           "cycle:8", "--k", "1", "--set", "0,1,4,5", "--no-strict")
    assert code == 0
    code, rep = structured(capsys, "partition", "--gen", "cycle:4", "--k", "0")
    assert rep["status"] == "found" and rep["parts"] == [[0, 1], [2, 3]]
    assert rep["two_part_properties"]["cut"] == 2


def test_bounds_formula_gen(capsys):
    code, rep = structured(capsys, "bounds", "--gen", "complete:5", "--k", "1")
    vals = {b["name"]: b["value"] for b in rep["bounds"]}
    assert vals["degree_lower"] == 4 and vals["degree_upper"] == 4 and vals["size_lower"] == 3
    code, rep = structured(capsys, "formula", "--gen", "cycle:10", "--k", "0")
    assert rep["value"] == 6
    code, out, _ = run_cli(capsys, "gen", "cycle:4")
    assert out == "4 4\n0 1\n0 3\n1 2\n2 3\n"


@pytest.mark.parametrize("problem,k", [("total-dom", None), ("def-off-alliance", 0),
                                       ("signed-total", 2), ("powerful", 0)])
def test_solve_other_problems(capsys, problem, k):
    argv = ["solve", "--problem", problem, "--gen", "complete:5"]
    if k is not None:
        argv += ["--k", str(k)]
    code, rep = structured(capsys, *argv)
    assert code == 0 and rep["status"] == "optimal"


def test_structured_output_deterministic():
    argv = [sys.executable, "-m", "kmonopoly", "solve", "--gen", "cycle:22", "--k", "0",
            "--format", "structured"]
    outs = {subprocess.run(argv + ["--workers", w], capture_output=True, text=True,
                           check=True).stdout for w in ("1", "2", "1")}
    assert len(outs) == 1
    assert json.loads(outs.pop())["optimum"] == 12
