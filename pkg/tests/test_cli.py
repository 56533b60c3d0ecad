import json
import subprocess
import sys

import pytest

from gelfand_bd.cli import run


def cli(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_insert_bitableau_json(capsys):
    code, out, _ = cli(capsys, "insert", "--word", "-3,4,-1,2", "--algo", "bitableau", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["P"] == {"plus": [[2], [4]], "minus": [[1], [3]]}
    assert data["Q"] == data["P"]


def test_insert_domino_ascii(capsys):
    code, out, _ = cli(capsys, "insert", "--word", "2,1", "--format", "ascii")
    assert code == 0 and out.startswith("P:\n")


def test_insert_rejects_bad_word(capsys):
    code, _, err = cli(capsys, "insert", "--word", "1,1")
    assert code == 1 and "signed permutation" in err


def test_verify_descents_exit_zero(capsys):
    code, out, _ = cli(capsys, "verify", "--suite", "descents", "--rank", "3", "--core", "1")
    assert code == 0 and json.loads(out)[0]["ok"]


def test_verify_bijection_counts(capsys):
    code, out, _ = cli(capsys, "verify", "--suite", "bijection", "--rank", "3", "--core", "0")
    assert code == 0
    assert json.loads(out)[0]["counts"]["same_shape_pairs"] == 48


def test_verify_all_rank_two(capsys):
    code, out, _ = cli(capsys, "verify", "--suite", "all", "--rank", "2")
    assert code == 0 and all(rep["ok"] for rep in json.loads(out))


def test_verify_failure_exits_two(capsys):
    code, out, _ = cli(capsys, "verify-edges", "--rank", "3")
    reports = json.loads(out)
    assert code == 2
    assert [rep["suite"] for rep in reports] == ["edges", "edge-tableaux"]
    assert reports[0]["ok"] and not reports[1]["ok"]


def test_jobs_do_not_change_output(capsys):
    args = ("verify", "--suite", "all", "--rank", "2")
    _, one, _ = cli(capsys, *args)
    _, two, _ = cli(capsys, *args, "--jobs", "2")
    assert one == two


def test_usage_errors(capsys):
    assert cli(capsys, "bogus")[0] == 1
    assert cli(capsys, "verify", "--suite", "nope", "--rank", "2")[0] == 1
    assert cli(capsys, "wgraph", "--rank", "6")[0] == 1
    assert cli(capsys, "insert")[0] == 1
    assert "usage" in cli(capsys, "insert")[2]


def test_wgraph_dot_and_json(capsys):
    code, out, _ = cli(capsys, "wgraph", "--type", "B", "--rank", "2", "--model", "row", "--out", "dot")
    assert code == 0 and out.startswith("digraph")
    code, out, _ = cli(capsys, "wgraph", "--rank", "2", "--out", "json")
    assert json.loads(out)["rank"] == 2


def test_molecules_and_cells(capsys):
    code, out, _ = cli(capsys, "molecules", "--rank", "3", "--format", "json")
    assert code == 0 and json.loads(out)["count"] == 8
    code, out, _ = cli(capsys, "cells", "--type", "D", "--rank", "3", "--format", "json")
    assert code == 0 and json.loads(out)["count"] == 5


def test_moves_and_closure(capsys):
    code, out, _ = cli(capsys, "moves", "--word", "2,1", "--format", "json")
    assert code == 0 and {"move": "D3", "word": "-2,1"} in json.loads(out)
    code, out, _ = cli(capsys, "closure", "--word", "2,-1,3", "--kind", "admissible")
    assert json.loads(out)["size"] == 3


def test_basis_json(capsys):
    code, out, _ = cli(capsys, "basis", "--rank", "2", "--model", "col")
    data = json.loads(out)
    assert code == 0 and data["model"] == "n" and len(data["vertices"]) == 6


def test_format_env_default(capsys, monkeypatch):
    monkeypatch.setenv("GELFAND_BD_FORMAT", "json")
    code, out, _ = cli(capsys, "insert", "--word", "1,2")
    assert code == 0 and json.loads(out)["word"] == "1,2"


def test_console_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "gelfand_bd.cli", "insert", "--word", "-1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "P:" in proc.stdout
