"""Front-end behaviour: exit codes, line formats, file loading, figures."""

import json

import pytest

from oracletree.cli import main


def lines_of(capsys):
    captured = capsys.readouterr()
    return [json.loads(line) for line in captured.out.splitlines()], captured.err


def test_run_success(capsys):
    code = main(["run", "--tree", "threshold", "--input", "3", "--oracle", "all-true"])
    out, err = lines_of(capsys)
    assert code == 0
    assert out == [
        {
            "result": "out",
            "value": True,
            "qs": [0, 1, 2],
            "ans": [True, True, True],
            "budget": {"questions": 16, "steps": 200},
        }
    ]
    assert "output True" in err


def test_run_timeout_exit_2(capsys):
    code = main(["run", "--tree", "threshold", "--input", "3", "--oracle", "all-false"])
    out, _err = lines_of(capsys)
    assert code == 2
    assert out[0]["result"] == "timeout"


def test_run_needs_question_exit_3(capsys):
    code = main(["run", "--tree", "threshold", "--input", "3", "--oracle", "all-true", "--qfuel", "1"])
    out, err = lines_of(capsys)
    assert code == 3
    assert out[0]["result"] == "ask"
    assert out[0]["value"] == 1
    assert "raise --qfuel" in err


def test_run_search_tree(capsys):
    code = main(["run", "--tree", "search", "--input", "9", "--oracle", "evens"])
    out, _err = lines_of(capsys)
    assert code == 0
    assert out[0]["value"] == 0


def test_reduce_refl_verdict_lines(capsys):
    code = main(["reduce", "refl", "--oracle", "evens", "--range", "0..5"])
    out, err = lines_of(capsys)
    assert code == 0
    assert out == [{"x": x, "verdict": "true" if x % 2 == 0 else "false"} for x in range(6)]
    assert "6 verdicts" in err


def test_reduce_complement_flips(capsys):
    code = main(["reduce", "complement", "--oracle", "evens", "--range", "0..3"])
    out, _err = lines_of(capsys)
    assert code == 0
    assert [o["verdict"] for o in out] == ["false", "true", "false", "true"]


def test_pt_shorthand(capsys):
    code = main(["pt", "--p", "odds", "--range", "0..4"])
    out, _err = lines_of(capsys)
    assert code == 0
    assert [o["verdict"] for o in out] == ["false", "true", "false", "true", "false"]


def test_bad_range_exit_1(capsys):
    assert main(["reduce", "refl", "--range", "5..1"]) == 1
    _out, err = lines_of(capsys)
    assert "error:" in err


def test_unknown_subcommand_exit_1(capsys):
    assert main(["frobnicate"]) == 1


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0


def test_tt_needs_table_file(capsys):
    assert main(["tt"]) == 1
    _out, err = lines_of(capsys)
    assert "--table" in err


def test_tt_from_file(tmp_path, capsys):
    rows = [
        {"x": x, "queries": [x, x + 1], "table": [False, True, True, False]}
        for x in range(3)
    ]
    path = tmp_path / "xor.json"
    path.write_text(json.dumps(rows))
    code = main(["tt", "--table", str(path), "--oracle", "evens", "--range", "0..2"])
    out, _err = lines_of(capsys)
    assert code == 0
    assert [o["verdict"] for o in out] == ["true", "true", "true"]


def test_tt_bad_row_count(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps([{"x": 0, "queries": [0, 1], "table": [True]}]))
    assert main(["tt", "--table", str(path)]) == 1


def test_oracle_file_scalar_and_list_answers(tmp_path, capsys):
    path = tmp_path / "oracle.json"
    path.write_text(json.dumps([
        {"q": 0, "a": True},
        {"q": 1, "a": [False]},
        {"q": 2, "a": [True]},
    ]))
    code = main(["reduce", "refl", "--oracle", str(path), "--range", "0..2"])
    out, _err = lines_of(capsys)
    assert code == 0
    assert [o["verdict"] for o in out] == ["true", "false", "true"]


def test_relational_oracle_file_rejected(tmp_path, capsys):
    path = tmp_path / "oracle.json"
    path.write_text(json.dumps([{"q": 0, "a": [True, False]}]))
    assert main(["reduce", "refl", "--oracle", str(path), "--range", "0..0"]) == 1
    _out, err = lines_of(capsys)
    assert "relational" in err


def test_missing_oracle_file_exit_1(capsys):
    assert main(["reduce", "refl", "--oracle", "/no/such/file.json"]) == 1


def test_figures_are_written(tmp_path, capsys):
    code = main(["pt", "--range", "0..3", "--figures", str(tmp_path)])
    _out, err = lines_of(capsys)
    assert code == 0
    assert (tmp_path / "reduce-pt-verdicts.png").stat().st_size > 0
    assert "figure written" in err


def test_demo_hypersimple(tmp_path, capsys):
    code = main(["demo-hypersimple", "--range", "0..6", "--figures", str(tmp_path)])
    out, err = lines_of(capsys)
    assert code == 0
    doubles = [o for o in out if o["enum"] == "double"]
    assert [o["verdict"] for o in doubles] == ["true", "false"] * 3 + ["true"]
    xors = [o for o in out if o["enum"] == "xor1"]
    assert all(o["verdict"] == "true" for o in xors)
    assert "7/7" in err
    for name in (
        "hypersimple-double-verdicts.png",
        "hypersimple-double-enumerator.png",
        "hypersimple-xor1-verdicts.png",
        "hypersimple-xor1-enumerator.png",
    ):
        assert (tmp_path / name).exists()


def test_selftest_ok_and_deterministic(capsys):
    code = main(["selftest", "--cases", "2"])
    first, err = lines_of(capsys)
    assert code == 0
    assert len(first) == 13
    assert all(o["ok"] for o in first)
    assert "13/13 suites ok" in err
    code = main(["selftest", "--cases", "2"])
    second, _err = lines_of(capsys)
    assert code == 0
    assert second == first


def test_selftest_broken_indexing_trips(capsys):
    # enough random tables that at least one is endianness-asymmetric
    code = main(["selftest", "--cases", "8", "--broken-tt-indexing"])
    out, err = lines_of(capsys)
    assert code == 4
    bad = [o for o in out if not o["ok"]]
    assert any(o["suite"] == "truthtable-agreement" for o in bad)
    assert "truthtable-agreement" in err
