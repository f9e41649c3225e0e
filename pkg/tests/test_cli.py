from __future__ import annotations

import json

import pytest

from qmodular.cli import main
from qmodular.poly import LaurentPoly, q_integer

P = LaurentPoly.parse


def run(capsys, *argv):
    code = main(list(argv) + ["--no-timestamp"])
    out = capsys.readouterr().out
    return code, out


def result(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)["result"]


def test_qrat_examples(capsys):
    code, doc = result(capsys, "qrat", "5/12")
    assert code == 0
    assert P(doc["den"]) == P("q + 1") * P("q^2 + 1") * P("q^2 + q + 1")
    code, doc = result(capsys, "qrat", "3/1", "--jones")
    assert P(doc["jones"]) == P("1 + q^2 + q^3")
    code, doc = result(capsys, "qrat", "0/1")
    assert (doc["num"], doc["den"]) == ("0", "1")


def test_qrat_full_document(capsys):
    code, doc = result(capsys, "qrat", "-7/3", "--eval", "3", "--eval", "5")
    assert code == 0 and doc["cf"] is None and doc["jones"] is None
    assert [e["n"] for e in doc["evaluations"]] == [3, 5]
    code, doc = result(capsys, "qrat", "13/5", "--eval", "5")
    assert doc["cf"] == [3, 3, 2] and doc["d_alpha"] >= 0 and "jones" in doc["evaluations"][0]
    code, doc = result(capsys, "qrat", "6/1")
    assert P(doc["num"]) == q_integer(6)


@pytest.mark.parametrize("bad", ["3/0", "x/2", "1/2/3"])
def test_qrat_bad_input_exits_2(capsys, bad):
    assert main(["qrat", bad]) == 2


def test_jones_below_one_is_an_input_error(capsys):
    assert main(["qrat", "1/2", "--jones"]) == 2


def test_group_examples(capsys):
    code, doc = result(capsys, "group", "--zeta", "5")
    assert code == 0 and doc["order"] == 600
    code, doc = result(capsys, "group", "--zeta", "6", "--cap", "500")
    assert code == 0 and doc["verdict"] == "CapExceeded"
    code, doc = result(capsys, "group", "--zeta", "2")
    assert doc["order"] == 12
    assert sorted(tuple(t) for t in doc["trace_set"]) == sorted((v,) for v in (0, 1, -1, 2, -2))


@pytest.mark.parametrize("argv", [["group", "--zeta", "0"], ["certify", "--zeta", "-3"],
                                  ["group", "--zeta", "two"], ["scan", "--property", "bogus"],
                                  ["group"], []])
def test_bad_arguments_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_certify_examples(capsys):
    code, doc = result(capsys, "certify", "--zeta", "4")
    assert code == 0 and doc["verdict"] == "Finite" and doc["order"] == 96
    assert doc["structure"]["kind"] == "SemidirectC4" and doc["structure"]["center_size"] == 4
    code, doc = result(capsys, "certify", "--zeta", "7")
    assert code == 0 and doc["witness"]["kind"] == "SpectralGrowth" and doc["witness"]["j"] == 4
    code, doc = result(capsys, "certify", "--zeta", "6")
    assert code == 0 and doc["witness"]["kind"] == "NonDiagonalizable" and doc["witness"]["word"] == "R^3 S"


def test_certify_undecided_exits_1(capsys):
    code, doc = result(capsys, "certify", "--zeta", "5", "--cap", "50")
    assert code == 1 and doc["verdict"] == "Undecided"


@pytest.mark.parametrize("prop", ["s-tables", "div-laws", "aux-laws", "trace-zeta6"])
def test_scan_properties_pass(capsys, prop):
    extra = ["--max-den", "60"] if prop == "s-tables" else []
    code, doc = result(capsys, "scan", "--property", prop, *extra)
    assert code == 0 and doc["ok"] and doc["first_failure"] is None
    assert doc["counts"]["fail"] == 0


def test_scan_value_sets_small_budget_reports_failure(capsys):
    # a budget this small cannot show every zeta_5 value in its first half
    code, doc = result(capsys, "scan", "--property", "value-sets", "--budget", "40")
    assert code == 1 and doc["first_failure"] is not None


def test_text_format_and_out_file(tmp_path, capsys):
    target = tmp_path / "o.json"
    assert main(["certify", "--zeta", "7", "--out", str(target), "--no-timestamp"]) == 0
    assert json.loads(target.read_text())["result"]["verdict"] == "Infinite"
    code, out = run(capsys, "qrat", "5/2", "--format", "text")
    assert code == 0 and "jones:" in out and "{" not in out


def test_timestamp_present_unless_suppressed(capsys):
    main(["qrat", "2/1"])
    assert "timestamp" in json.loads(capsys.readouterr().out)
    main(["qrat", "2/1", "--no-timestamp"])
    assert "timestamp" not in json.loads(capsys.readouterr().out)


def test_seed_is_recorded_and_changes_samples(capsys):
    _, a = run(capsys, "scan", "--property", "div-laws", "--seed", "7")
    _, b = run(capsys, "scan", "--property", "div-laws", "--seed", "8")
    assert json.loads(a)["config"]["seed"] == 7
    assert a != b
