"""The command-line interface, run in process."""

import json

import pytest

from cyclepat import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_worked_example(capsys):
    code, out, _ = run(capsys, "count", "(2 7 5 3 6 8)(1 4)")
    assert code == 0
    assert "between: 2" in out and "within: 2" in out
    assert "total: 4" in out and "cycles: 2" in out


def test_count_one_line_input(capsys):
    code, out, _ = run(capsys, "count", "213")
    assert code == 0
    assert "cycle form [dec-min]: (3)(1 2)" in out
    assert "total: 0" in out


def test_count_identity_is_zero(capsys):
    code, out, _ = run(capsys, "count", "1,2,3,4,5", "--pattern", "32-1")
    assert code == 0 and "total: 0" in out and "cycles: 5" in out


def test_count_json_and_pair(capsys):
    code, out, _ = run(
        capsys, "count", "47613852", "--pair", "2-13", "31-2", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["total"] == payload["between"] + payload["within"]
    assert payload["convention"] == "dec-min"


def test_count_convention_flag(capsys):
    code, out, _ = run(capsys, "count", "213", "--convention", "inc-max")
    assert code == 0 and "cycle form [inc-max]: (2 1)(3)" in out


def test_unknown_pattern_lists_the_twelve_names(capsys):
    with pytest.raises(SystemExit):
        cli.main(["count", "123", "--pattern", "2-14"])
    err = capsys.readouterr().err
    assert "unknown pattern" in err
    for name in ("1-23", "2-13", "32-1"):
        assert name in err


def test_bad_permutation_input(capsys):
    code, _, err = run(capsys, "count", "(1 3)")
    assert code == 2 and "cycle form must cover" in err


def test_expand_stirling_row(capsys):
    code, out, _ = run(capsys, "expand", "--n-max", "3", "--q", "1", "--y", "1")
    assert code == 0
    assert "t^3: 6 + 11*x + 6*x^2 + x^3" in out


def test_expand_json_rows(capsys):
    code, out, _ = run(
        capsys, "expand", "--n-max", "3", "--x", "1", "--y", "1", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["t_max"] == 3 and payload["pinned"] == {"x": 1, "y": 1}
    row = {term["q"]: term["coeff"] for term in payload["rows"][3]["terms"]}
    assert row == {"0": 14, "1": 8, "2": 2} or row == {0: 14, 1: 8, 2: 2}


def test_verify_named_suites_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "t3-row", "stirling")
    assert code == 0
    assert "passed" in out and "0 failed" in out


def test_verify_json_records(capsys):
    code, out, _ = run(capsys, "verify", "t3-row", "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert {record["status"] for record in records} == {"pass", "deviation"}
    assert all(record["suite"] == "t3-row" for record in records)


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "bogus")
    assert code == 2 and "unknown suite" in err


def test_classes_csv_shape_and_determinism(capsys, tmp_path):
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    assert cli.main(["classes", "--n-max", "3", "--out", str(first)]) == 0
    capsys.readouterr()
    assert cli.main(["classes", "--n-max", "3", "--out", str(second)]) == 0
    capsys.readouterr()
    text = first.read_text()
    assert text == second.read_text()
    lines = text.splitlines()
    assert lines[0] == "class,between,within"
    assert len(lines) == 1 + 144


def test_classes_json_includes_diff(capsys):
    code, out, _ = run(capsys, "classes", "--n-max", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["n_max"] == 3
    assert sum(len(members) for members in payload["classes"]) == 144
    assert payload["table_diff"]["groups_total"] == 29


def test_classes_respects_the_enumeration_cap(capsys, monkeypatch):
    monkeypatch.setenv("CPL_MAX_N", "4")
    code, _, err = run(capsys, "classes", "--n-max", "6")
    assert code == 2 and "cap" in err


def test_phi_table_and_check(capsys):
    code, out, _ = run(capsys, "phi", "--n-max", "6", "--check")
    assert code == 0 and "all values match" in out


def test_phi_csv(capsys):
    code, out, _ = run(capsys, "phi", "--n", "2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "i,m,n,value"
    assert "0,0,2,2" in lines


def test_phi_json_anchor_values(capsys):
    code, out, _ = run(capsys, "phi", "--n", "2", "--check", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    values = {(r["i"], r["m"], r["n"]): r["value"] for r in payload["rows"]}
    assert values[(0, 1, 2)] == 2 and values[(1, 1, 2)] == 1
    assert payload["mismatches"] == []
