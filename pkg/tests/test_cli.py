"""End-to-end CLI tests (subprocess) plus in-process exit-code checks."""

import json
import math
import subprocess
import sys

import pytest

from eulergamma.cli import main
from eulergamma.identities import run_suite
from eulergamma.reporting import render_json


def run_cli(*args, **kwargs):
    return subprocess.run(
        [sys.executable, "-m", "eulergamma", *args],
        capture_output=True, text=True, **kwargs,
    )


def test_eval_gamma_reference():
    result = run_cli("eval", "gamma", "0.5")
    assert result.returncode == 0
    assert result.stdout == "1.77245385090552\n"


def test_eval_beta_reference():
    result = run_cli("eval", "beta", "0.5", "0.5")
    assert result.returncode == 0
    assert result.stdout == "3.14159265358979\n"


def test_eval_symbol_integral_engine():
    result = run_cli("eval", "symbol", "1", "1", "2", "--engine", "integral")
    assert result.returncode == 0
    value = float(result.stdout)
    assert abs(value - math.pi / 2.0) / (math.pi / 2.0) <= 1e-10


def test_eval_lgamma_both_engines():
    ref = run_cli("eval", "lgamma", "7.7")
    quad = run_cli("eval", "lgamma", "7.7", "--engine", "integral")
    assert ref.returncode == 0 and quad.returncode == 0
    assert abs(float(ref.stdout) - float(quad.stdout)) <= 1e-9


def test_eval_loggamma_integral():
    result = run_cli("eval", "loggamma_integral", "0.5", "--engine", "integral")
    assert result.returncode == 0
    assert abs(float(result.stdout) - 0.8862269254527580) <= 1e-9


def test_eval_wrong_arity_exits_2():
    assert run_cli("eval", "beta", "0.5").returncode == 2
    assert run_cli("eval", "gamma", "1", "2").returncode == 2


def test_eval_domain_error_exits_2():
    result = run_cli("eval", "gamma", "0")
    assert result.returncode == 2
    assert "positive" in result.stderr


def test_eval_non_integer_symbol_exponent_exits_2():
    result = run_cli("eval", "symbol", "1", "1", "2.5")
    assert result.returncode == 2
    assert "integer" in result.stderr


def test_eval_unknown_function_exits_2():
    assert run_cli("eval", "zeta", "2").returncode == 2


def test_verify_gauss_acceptance_member():
    result = run_cli("verify", "gauss-multiplication", "--n", "5", "--x", "3.7")
    assert result.returncode == 0
    assert "result:        PASS" in result.stdout


def test_verify_reflection_half_shows_pi():
    result = run_cli("verify", "reflection", "--x", "0.5")
    assert result.returncode == 0
    assert "lhs:           3.14159265358979" in result.stdout
    assert "rhs:           3.14159265358979" in result.stdout


def test_verify_reflection_out_of_domain_exits_2():
    result = run_cli("verify", "reflection", "--x", "1.5")
    assert result.returncode == 2
    assert "x must lie in (0,1)" in result.stderr


def test_verify_unknown_identity_exits_2():
    result = run_cli("verify", "does-not-exist", "--x", "0.5")
    assert result.returncode == 2
    assert "unknown identity" in result.stderr


def test_verify_missing_param_exits_2():
    result = run_cli("verify", "gauss-multiplication", "--n", "5")
    assert result.returncode == 2
    assert "--x" in result.stderr


def test_verify_extraneous_param_exits_2():
    result = run_cli("verify", "reflection", "--x", "0.5", "--n", "3")
    assert result.returncode == 2
    assert "does not take" in result.stderr


def test_verify_factorial_root_modes():
    closed = run_cli("verify", "factorial-root", "--m", "2", "--n", "3")
    assert closed.returncode == 0
    assert "mode=closed" in closed.stdout
    quad = run_cli("verify", "factorial-root", "--m", "2", "--n", "3",
                   "--mode", "quadrature")
    assert quad.returncode == 0
    assert "mode=quadrature" in quad.stdout


def test_verify_tolerance_override_can_force_failure():
    result = run_cli("verify", "gauss-multiplication", "--n", "5", "--x", "3.7",
                     "--tol", "1e-30")
    assert result.returncode == 1
    assert "result:        FAIL" in result.stdout


def test_verify_beyond_default_grid():
    assert run_cli("verify", "sine-product", "--n", "40").returncode == 0


def test_suite_csv_header_and_rows():
    result = run_cli("suite", "--identities", "sine-product", "--n", "2..6",
                     "--format", "csv")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "identity_id,params,lhs,rhs,abs_residual,rel_residual,tolerance,passed"
    assert len(lines) == 6
    assert lines[1].startswith("sine-product,n=2,")
    assert lines[1].endswith(",true")


def test_suite_table_summary():
    result = run_cli("suite", "--identities", "reflection", "--x", "0.25,0.5")
    assert result.returncode == 0
    assert "pass 2  fail 0" in result.stdout


def test_suite_tol_override_forces_exit_1():
    result = run_cli("suite", "--identities", "gauss-multiplication",
                     "--tol", "gauss-multiplication=1e-30")
    assert result.returncode == 1


def test_suite_unknown_identity_exits_2():
    result = run_cli("suite", "--identities", "nope")
    assert result.returncode == 2
    assert "unknown identity" in result.stderr


def test_suite_bad_flags_exit_2():
    assert run_cli("suite", "--identities", "sine-product", "--n", "5..2").returncode == 2
    assert run_cli("suite", "--identities", "sine-product", "--n", "abc").returncode == 2
    assert run_cli("suite", "--tol", "gauss-multiplication").returncode == 2
    assert run_cli("suite", "--format", "xml").returncode == 2
    assert run_cli("suite", "--abs-tol", "-1").returncode == 2


def test_suite_out_file_matches_stdout(tmp_path):
    out = tmp_path / "report.json"
    to_file = run_cli("suite", "--identities", "sine-product", "--format", "json",
                      "--out", str(out))
    to_stdout = run_cli("suite", "--identities", "sine-product", "--format", "json")
    assert to_file.returncode == 0
    assert to_file.stdout == ""
    assert out.read_text() == to_stdout.stdout


def test_suite_unwritable_out_exits_3():
    result = run_cli("suite", "--identities", "sine-product",
                     "--out", "/nonexistent-dir/report.json")
    assert result.returncode == 3
    assert result.stderr.strip() != ""


def test_suite_json_round_trips_report_fields():
    suite = run_suite({"sine-product": [{"n": n} for n in range(2, 7)]})
    parsed = json.loads(render_json(suite))
    assert parsed["summary"] == {"pass": suite.n_pass, "fail": suite.n_fail}
    for rendered, report in zip(parsed["reports"], suite.reports):
        assert rendered["identity_id"] == report.identity_id
        assert rendered["params"] == {k: report.params[k] for k in report.params}
        assert rendered["lhs"] == report.lhs
        assert rendered["rhs"] == report.rhs
        assert rendered["abs_residual"] == report.abs_residual
        assert rendered["rel_residual"] == report.rel_residual
        assert rendered["tolerance"] == report.tolerance
        assert rendered["passed"] is report.passed


def test_suite_restricted_axes_apply_to_matching_identities_only():
    result = run_cli("suite", "--identities", "sine-product,reflection",
                     "--n", "2,3", "--format", "csv")
    assert result.returncode == 0
    lines = result.stdout.splitlines()[1:]
    sine = [line for line in lines if line.startswith("sine-product")]
    reflection = [line for line in lines if line.startswith("reflection")]
    assert len(sine) == 2
    assert len(reflection) == 20  # untouched default axis


def test_main_is_callable_in_process(capsys):
    code = main(["eval", "gamma", "5"])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out == "24\n"


def test_main_maps_domain_error_to_usage_exit(capsys):
    code = main(["verify", "reflection", "--x", "1.5"])
    captured = capsys.readouterr()
    assert code == 2
    assert "x must lie in (0,1)" in captured.err


def test_console_script_installed():
    result = subprocess.run(["eulergamma", "eval", "gamma", "0.5"],
                            capture_output=True, text=True)
    assert result.returncode == 0
    assert result.stdout == "1.77245385090552\n"
