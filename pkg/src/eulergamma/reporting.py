"""Render SuiteReports and IdentityReports as tables, JSON, or CSV.

Machine formats (JSON, CSV) serialize floats with ``repr``: the shortest
string that round-trips to the exact binary64 value.  Human tables use 15
significant digits.  Suite renderings exclude wall_time so that identical
flags produce byte-identical output; timing stays available on the in-memory
reports and in the single-check view.
"""

import csv
import io
import json
import math

from .identities import IdentityReport, SuiteReport


def _fmt_value(value):
    if isinstance(value, float):
        return repr(value)
    return str(value)


def params_string(params) -> str:
    """Canonical `name=value` list, ';'-joined, sorted by name."""
    return ";".join(f"{k}={_fmt_value(v)}" for k, v in sorted(params.items()))


def _json_number(value):
    # Strict JSON has no NaN/Infinity; those only arise from checks that
    # crashed, and null marks them unambiguously.
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def _report_object(report: IdentityReport) -> dict:
    return {
        "identity_id": report.identity_id,
        "params": {k: report.params[k] for k in sorted(report.params)},
        "lhs": _json_number(report.lhs),
        "rhs": _json_number(report.rhs),
        "abs_residual": _json_number(report.abs_residual),
        "rel_residual": _json_number(report.rel_residual),
        "tolerance": report.tolerance,
        "passed": report.passed,
    }


def render_json(suite: SuiteReport) -> str:
    document = {
        "config": {k: suite.config_echo[k] for k in suite.config_echo},
        "reports": [_report_object(r) for r in suite.reports],
        "summary": {"pass": suite.n_pass, "fail": suite.n_fail},
    }
    return json.dumps(document, indent=2, allow_nan=False) + "\n"


CSV_HEADER = ("identity_id", "params", "lhs", "rhs", "abs_residual",
              "rel_residual", "tolerance", "passed")


def render_csv(suite: SuiteReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in suite.reports:
        writer.writerow([
            r.identity_id,
            params_string(r.params),
            repr(r.lhs),
            repr(r.rhs),
            repr(r.abs_residual),
            repr(r.rel_residual),
            repr(r.tolerance),
            "true" if r.passed else "false",
        ])
    return buffer.getvalue()


_TABLE_COLUMNS = ("identity_id", "params", "lhs", "rhs", "rel_residual",
                  "tolerance", "status")


def _g15(value) -> str:
    return format(value, ".15g")


def render_table(suite: SuiteReport) -> str:
    rows = [
        (
            r.identity_id,
            params_string(r.params),
            _g15(r.lhs),
            _g15(r.rhs),
            _g15(r.rel_residual),
            _g15(r.tolerance),
            "PASS" if r.passed else "FAIL",
        )
        for r in suite.reports
    ]
    widths = [len(h) for h in _TABLE_COLUMNS]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(_TABLE_COLUMNS, widths)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    lines.append("")
    lines.append(f"pass {suite.n_pass}  fail {suite.n_fail}")
    return "\n".join(lines) + "\n"


def render_report(report: IdentityReport) -> str:
    """Single-check view for the verify command, wall time included."""
    lines = [
        f"identity:      {report.identity_id}",
        f"params:        {params_string(report.params)}",
        f"lhs:           {_g15(report.lhs)}",
        f"rhs:           {_g15(report.rhs)}",
        f"abs_residual:  {_g15(report.abs_residual)}",
        f"rel_residual:  {_g15(report.rel_residual)}",
        f"tolerance:     {_g15(report.tolerance)}",
        f"wall_time_s:   {format(report.wall_time, '.6f')}",
        f"result:        {'PASS' if report.passed else 'FAIL'}",
    ]
    return "\n".join(lines) + "\n"


def render_suite(suite: SuiteReport, kind: str) -> str:
    if kind == "table":
        return render_table(suite)
    if kind == "json":
        return render_json(suite)
    if kind == "csv":
        return render_csv(suite)
    raise ValueError(f"unknown output format {kind!r}")
