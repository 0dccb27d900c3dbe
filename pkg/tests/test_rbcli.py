import json

import pytest

import param
import rbcli
from repro import DEG4_RELATIONS


def run(capsys, *argv):
    code = rbcli.main(["--nocolor", *argv])
    return code, capsys.readouterr()


def test_check_holds(capsys):
    code, out = run(capsys, "check", "--identity", "f4", "--model", "seq:N=6", "--samples", "200", "--seed", "42")
    assert code == rbcli.OK
    assert out.out.startswith("f4 on seq:N=6: holds (200 samples, random:200,seed=42,bound=3, evidence)")


def test_check_fails_on_grid(capsys):
    code, out = run(capsys, "check", "--identity", "f5plus", "--model", "poly:mul=star,k=2,n=0", "--grid", "4")
    assert code == rbcli.FAILED
    assert "fails" in out.out
    assert "value = " in out.out


def test_search_prints_the_witness(capsys):
    argv = ["check", "--identity", "f5plus", "--model", "poly:mul=star,k=2,n=0", "--search", "--format", "json"]
    code, out = run(capsys, *argv)
    assert code == rbcli.FAILED
    search = json.loads(out.out)["search"]
    assert search["status"] == "found"
    assert search["witness"] == {"a": "1", "b": "1*x", "c": "1*x^2", "d": "1*x^3", "e": "1*x^4"}
    assert search["value"] == "-4537/6107270400*x^18"


def test_check_inline_text(capsys):
    code, out = run(capsys, "check", "--text", "(a*b)*c - (a*c)*b", "--model", "poly:mul=int", "--grid", "2")
    assert code == rbcli.OK
    assert "expression on poly:mul=int: holds (27 samples" in out.out


def test_check_definitions_file(capsys, tmp_path):
    source = tmp_path / "rcom.rb"
    source.write_text("r(a,b,c) := (a*b)*c - (a*c)*b\n", encoding="utf-8")
    code, out = run(capsys, "check", "--file", str(source), "--format", "json", "--samples", "20")
    assert code == rbcli.OK
    result = json.loads(out.out)
    assert result["identity"] == "r"
    assert result["verdict"]["status"] == "holds"


def test_solve_lie_degree_four(capsys):
    code, out = run(capsys, "solve", "--degree", "4", "--symmetry", "anticomm", "--format", "json")
    assert code == rbcli.OK
    result = json.loads(out.out)
    assert result["dimension"] == 3
    assert result["rank"] == 12
    assert tuple(result["relations"]) == DEG4_RELATIONS


def test_solve_exports(capsys, tmp_path):
    kernel, matrix = tmp_path / "kernel.csv", tmp_path / "matrix.csv"
    argv = ["solve", "--degree", "4", "--symmetry", "anticomm", "--export-csv", str(kernel)]
    code, _ = run(capsys, *argv, "--export-matrix", str(matrix))
    assert code == rbcli.OK
    assert len(kernel.read_text(encoding="utf-8").splitlines()) == 4
    assert matrix.read_text(encoding="utf-8").startswith("row,")


def test_decompose(capsys):
    argv = ["decompose", "--identity", "g_lie4_2", "--span", "tortkara", "--symmetry", "anticomm"]
    code, out = run(capsys, *argv, "--format", "json")
    assert code == rbcli.OK
    result = json.loads(out.out)
    assert result["status"] == "exact"
    assert "tortkara(" in result["combination"]


def test_decompose_not_in_span(capsys):
    code, out = run(capsys, "decompose", "--text", "(a*b)*c", "--span", "rcom")
    assert code == rbcli.FAILED
    assert "not in the span" in out.out


def test_repro_table1_json(capsys, tmp_path):
    target = tmp_path / "table1.json"
    code, out = run(capsys, "repro", "table1", "--format", "json", "--output", str(target))
    assert code == rbcli.OK
    assert out.out == ""
    items = json.loads(target.read_text(encoding="utf-8"))["items"]
    assert len(items) == 12
    assert {item["status"] for item in items} == {"match"}


def test_models(capsys):
    code, out = run(capsys, "models")
    assert code == rbcli.OK
    assert "seq:N=<length>" in out.out
    assert "poly:mul=circ2" in out.out


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--identity", "f4", "--model", "foo:x=1"],
        ["check", "--text", "a*"],
        ["check", "--identity", "nope"],
        ["check", "--file", "/nonexistent/identity.rb"],
        [],
        ["check"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == rbcli.USAGE
    assert out.err


def test_help_is_not_an_error(capsys):
    code, out = run(capsys, "--help")
    assert code == rbcli.OK
    assert "check" in out.out


def test_seeded_runs_are_identical(capsys, monkeypatch):
    monkeypatch.setattr(param, "seed", param.seed)
    argv = ["check", "--identity", "f4", "--model", "seq:N=5", "--samples", "30", "--seed", "9", "--format", "json"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[0] == second[0] == rbcli.OK
    assert first[1].out == second[1].out


@pytest.mark.parametrize(
    "identity, model",
    [("rcom", "poly:mul=star,k=1,n=0"), ("f5plus", "poly:mul=star,k=2,n=0"), ("zinbiel", "poly:mul=star,k=1,n=0")],
)
def test_exit_code_follows_the_verdict(capsys, identity, model):
    code, out = run(capsys, "check", "--identity", identity, "--model", model, "--grid", "4", "--format", "json")
    status = json.loads(out.out)["verdict"]["status"]
    assert code == {"holds": rbcli.OK, "fails": rbcli.FAILED}[status]
