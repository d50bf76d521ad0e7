import json

import pytest

from exteriorcov.main import run_command


def run_json(capsys, *argv):
    code = run_command(["--format", "json", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


def check_statuses(report):
    return {check["name"]: check["status"] for check in report["checks"]}


def test_roots(capsys):
    code, report = run_json(capsys, "roots", "--type", "G", "--rank", "2")
    assert code == 0
    assert report["results"]["weyl_order"] == 12
    assert report["results"]["exponents"] == [1, 5]
    assert report["results"]["theta_s"] == [1, 0]
    assert report["runtime_ms"] is None


def test_gm_sl2(capsys):
    code, report = run_json(capsys, "gm", "--type", "A", "--rank", "1", "--weight", "2")
    assert code == 0
    assert report["results"]["polynomials"]["M"] == [[1, 1], [2, 1]]
    assert report["results"]["small"] is True


def test_gm_reports_the_smallness_witness(capsys):
    code, report = run_json(capsys, "gm", "--type", "A", "--rank", "1", "--weight", "4")
    assert code == 0
    assert report["results"]["small"] is False
    assert report["results"]["small_witness"] == "theta"
    assert report["results"]["polynomials"]["M"] == []


def test_gm_targeted_matches_full(capsys):
    _, full = run_json(capsys, "gm", "--type", "B", "--rank", "2", "--weight", "0,2", "--full")
    _, targeted = run_json(capsys, "gm", "--type", "B", "--rank", "2", "--weight", "0,2", "--targeted")
    assert full["results"]["polynomials"] == targeted["results"]["polynomials"]
    assert targeted["inputs"]["mode"] == "targeted"


def test_gm_outside_root_lattice_is_zero(capsys):
    code, report = run_json(capsys, "gm", "--type", "A", "--rank", "2", "--weight", "1,0")
    assert code == 0
    assert report["results"]["polynomials"]["M"] == []


def test_bazlov(capsys):
    code, report = run_json(capsys, "bazlov", "--type", "G", "--rank", "2")
    assert code == 0
    assert report["results"]["polynomials"]["formula"] == [[5, 1], [6, 1], [8, 1], [9, 1]]
    assert report["results"]["n0"] == 3
    assert all(status == "pass" for status in check_statuses(report).values())


def test_bazlov_on_simply_laced_type_is_a_usage_error(capsys):
    assert run_command(["bazlov", "--type", "A", "--rank", "3"]) == 2


def test_stembridge(capsys):
    code, report = run_json(capsys, "stembridge", "--partition", "2,1")
    assert code == 0
    assert report["results"]["weight"] == [1, 1]
    assert check_statuses(report)["hook formula = alternating sum"] == "pass"


def test_census(capsys):
    code, report = run_json(capsys, "census", "--type", "A", "--rank", "2")
    assert code == 0
    assert sorted(report["results"]["passing"]) == [[0, 0], [0, 3], [1, 1], [3, 0]]
    assert report["results"]["incomplete"] is False
    assert all(row["is_small_witness"] is None for row in report["results"]["rows"])


def test_census_out_of_budget_skips_the_verdict(capsys):
    code, report = run_json(capsys, "--budget-seconds", "0", "census", "--type", "A", "--rank", "2")
    assert code == 0
    assert report["results"]["incomplete"] is True
    assert check_statuses(report)["passing modules are exactly the expected ones"] == "skipped"


def test_scan_a(capsys):
    code, report = run_json(capsys, "scan-a", "--n", "4")
    assert code == 0
    assert sorted(report["results"]["divisible"]) == [[2, 1, 1], [4]]


def test_verify_sl2(capsys):
    code, report = run_json(capsys, "verify-sl", "--n", "2", "--trials", "3", "--seed", "7")
    assert code == 0
    assert report["seed"] == 7
    assert report["results"]["constant"] == "-1/2"
    assert report["results"]["constant_matches"] is True
    assert report["results"]["delta_scalar"] == "2"


def test_reports_are_deterministic(capsys):
    argv = ["gm", "--type", "B", "--rank", "2", "--weight", "1,0"]
    first = run_json(capsys, *argv)
    second = run_json(capsys, *argv)
    assert first == second


def test_timings_are_opt_in(capsys):
    code, report = run_json(capsys, "--timings", "roots", "--type", "A", "--rank", "2")
    assert code == 0
    assert isinstance(report["runtime_ms"], int)


@pytest.mark.parametrize("argv", [
    ["roots", "--type", "X", "--rank", "2"],
    ["roots", "--type", "B", "--rank", "1"],
    ["roots", "--type", "A", "--rank", "0"],
    ["gm", "--type", "A", "--rank", "2", "--weight", "1,2,3"],
    ["gm", "--type", "A", "--rank", "2", "--weight", "-1,0"],
    ["stembridge", "--partition", "1,2"],
    ["verify-sl", "--n", "1"],
    ["--jobs", "0", "roots", "--type", "A", "--rank", "1"],
    [],
])
def test_usage_errors(argv, capsys):
    assert run_command(argv) == 2
    assert capsys.readouterr().out == ""


def test_text_and_latex_formats(capsys):
    assert run_command(["gm", "--type", "A", "--rank", "1", "--weight", "2"]) == 0
    text = capsys.readouterr().out
    assert "M = q + q^2" in text
    assert "[pass]" in text
    assert run_command(["--format", "latex", "gm", "--type", "A", "--rank", "1", "--weight", "2"]) == 0
    latex = capsys.readouterr().out
    assert "\\begin{align*}" in latex


def test_cache_dir_flag(tmp_path, capsys):
    cache_dir = tmp_path / "flag-cache"
    assert run_command(["--cache-dir", str(cache_dir), "roots", "--type", "A", "--rank", "2"]) == 0
    assert run_command(["--cache-dir", str(cache_dir), "gm", "--type", "A", "--rank", "2", "--weight", "1,1"]) == 0
    assert (cache_dir / "A2.full.v1.json").exists()


@pytest.mark.slow
def test_selftest(capsys):
    code, report = run_json(capsys, "selftest", "--seed", "3")
    assert code == 0, [c for c in report["checks"] if c["status"] != "pass"]
    assert report["seed"] == 3
