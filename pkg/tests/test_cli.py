import json

from coxtoric import cli
from coxtoric.combinatorics import all_chains
from coxtoric.wonderful_model import representative_point


def run_cli(capsys, *args):
    code = cli.main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_betti_table(capsys):
    code, out, _ = run_cli(capsys, "betti-table", "--n", "6")
    assert code == 0
    payload = json.loads(out)
    assert [(r["i"], r["betti"]) for r in payload["rows"]] == [
        (0, 1), (1, 15), (2, 75), (3, 61)]


def test_single_row_selection(capsys):
    code, out, _ = run_cli(capsys, "betti-table", "--n", "6", "--i", "2")
    assert code == 0
    assert json.loads(out)["rows"] == [{"n": 6, "i": 2, "betti": 75}]
    code, _, err = run_cli(capsys, "betti-table", "--n", "6", "--i", "5")
    assert code == 2 and "--i" in err
    code, out, _ = run_cli(capsys, "rep-table", "--n", "6", "--i", "3")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 1 and rows[0]["betti"] == 61


def test_deterministic_output(capsys):
    _, first, _ = run_cli(capsys, "rep-table", "--n", "5")
    _, second, _ = run_cli(capsys, "rep-table", "--n", "5")
    assert first == second


def test_csv_output(capsys):
    code, out, _ = run_cli(capsys, "betti-table", "--n", "4", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,i,betti"
    assert lines[1:] == ["4,0,1", "4,1,6", "4,2,5"]


def test_csv_rejected_for_non_table(capsys):
    code, _, err = run_cli(capsys, "verify-cohomology", "--format", "csv")
    assert code == 2
    assert "csv" in err


def test_plain_format(capsys):
    code, out, _ = run_cli(capsys, "betti-table", "--n", "4", "--format", "plain")
    assert code == 0
    assert out.splitlines() == ["4 0 1", "4 1 6", "4 2 5"]


def test_out_file(tmp_path, capsys):
    target = tmp_path / "table.json"
    code, out, _ = run_cli(capsys, "betti-table", "--n", "4", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["command"] == "betti-table"


def test_verify_commands(capsys):
    code, out, _ = run_cli(capsys, "verify-cohomology", "--N", "6")
    assert code == 0 and json.loads(out)["verified"]
    code, out, _ = run_cli(capsys, "verify-poset-series", "--N", "6")
    assert code == 0 and json.loads(out)["verified"]


def test_describe(capsys):
    for command in cli.HANDLERS:
        code, out, _ = run_cli(capsys, command, "--describe")
        assert code == 0
        assert out.strip()
    descriptions = {cli.DESCRIPTIONS[c] for c in cli.HANDLERS}
    assert len(descriptions) == len(cli.HANDLERS)


def test_out_of_bounds(capsys):
    code, _, err = run_cli(capsys, "betti-table", "--n", "20")
    assert code == 2 and "limited" in err
    code, _, err = run_cli(capsys, "poset-homology", "--n", "12")
    assert code == 2
    code, _, err = run_cli(capsys, "verify-cohomology", "--N", "10")
    assert code == 2


def test_unknown_command(capsys):
    assert cli.main(["no-such-command"]) == 2
    capsys.readouterr()


def test_poset_homology_output(capsys):
    code, out, _ = run_cli(capsys, "poset-homology", "--n", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["ranks"] == {"2": 5}
    assert payload["character"]["1,1,1,1"] == 5
    assert payload["concentrated"]


def test_euler_check(capsys):
    code, out, _ = run_cli(capsys, "euler-check", "--N", "8")
    assert code == 0
    payload = json.loads(out)
    assert payload["verified"]
    assert payload["rows"][1] == {"n": 2, "cells": 0, "alternating_betti": 0, "ok": True}


def test_model_check_random(capsys):
    code, out, _ = run_cli(capsys, "model-check", "--n", "4", "--seed", "1",
                           "--trials", "20")
    assert code == 0
    assert json.loads(out)["ok"]


def test_model_check_point_file(tmp_path, capsys):
    chain = all_chains(3)[5]
    point = representative_point(chain)
    path = tmp_path / "point.json"
    path.write_text(json.dumps(point.to_json()))
    code, out, _ = run_cli(capsys, "model-check", "--point", str(path))
    assert code == 0
    payload = json.loads(out)
    assert payload["on_model"] and payload["degeneration_ok"]
    assert payload["orbit"] == [sorted(b) for b in chain]


def test_model_check_point_off_model(tmp_path, capsys):
    bad = {
        "n": 3,
        "components": [
            {"subset": [1, 2, 3], "coords": ["0", "0", "1"]},
            {"subset": [1, 2], "coords": ["1", "2"]},
            {"subset": [1, 3], "coords": ["1", "1"]},
            {"subset": [2, 3], "coords": ["0", "1"]},
        ],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out, _ = run_cli(capsys, "model-check", "--point", str(path))
    assert code == 1
    payload = json.loads(out)
    assert not payload["on_model"]
    assert payload["first_violation"] == [[1, 3], [1, 2, 3]]


def test_model_check_malformed_point(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "model-check", "--point", str(path))
    assert code == 2 and err


def test_model_check_missing_args(capsys):
    code, _, err = run_cli(capsys, "model-check")
    assert code == 2


def test_cup_commands(capsys):
    code, out, _ = run_cli(capsys, "cup-dim", "--n", "6")
    assert code == 0
    payload = json.loads(out)
    assert payload["dimension"] == 45 and payload["betti_2"] == 75
    assert not payload["spans_h2"]

    code, out, _ = run_cli(capsys, "cup-rep", "--n", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["dimension"] == 15
    assert {tuple(m["partition"]) for m in payload["multiplicities"]} == {
        (3, 1, 1), (2, 2, 1), (2, 1, 1, 1)}


def test_branching_command(capsys):
    code, out, _ = run_cli(capsys, "branching-check", "--n", "4")
    assert code == 0
    assert json.loads(out)["status"] == "infeasible"
    code, out, _ = run_cli(capsys, "branching-check", "--n", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "feasible"
    assert payload["witness"] == [
        {"partition": [3, 1, 1, 1], "multiplicity": 1},
        {"partition": [2, 2, 2], "multiplicity": 1},
    ]


def test_whitney_command(capsys):
    code, out, _ = run_cli(capsys, "whitney", "--n", "6")
    assert code == 0
    payload = json.loads(out)
    assert payload["alternating_sum_zero"]
    assert payload["rows"][0]["dimension"] == 1
    assert payload["rows"][1]["dimension"] == 15
