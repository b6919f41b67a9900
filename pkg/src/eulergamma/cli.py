"""Command-line interface.

Examples:
    eulergamma eval gamma 0.5
    eulergamma eval symbol 1 1 2 --engine integral
    eulergamma verify gauss-multiplication --n 5 --x 3.7
    eulergamma verify reflection --x 0.25
    eulergamma suite --format json --out report.json
    eulergamma suite --identities sine-product --n 2..40

Exit codes: 0 success / all checks passed; 1 failed check or unconverged
quadrature; 2 usage error; 3 I/O error.
"""

import argparse
import math
import sys

from .beta import beta_closed, beta_integral, euler_symbol, euler_symbol_closed
from .errors import DomainError, NonFiniteIntegrandError, NonIntegrableTailError
from .gamma import gamma_integral, gamma_log_integral, gamma_reference, log_gamma
from .identities import IDENTITIES, build_grid, run_suite
from .quadrature import QuadratureConfig
from .reporting import render_report, render_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3

_EVAL_ARITY = {
    "gamma": 1,
    "lgamma": 1,
    "beta": 2,
    "symbol": 3,
    "loggamma_integral": 1,
}

_NUMERIC_AXES = ("x", "m", "n", "p", "q", "phi")


def _add_config_flags(sub):
    group = sub.add_argument_group("quadrature options")
    group.add_argument("--abs-tol", type=float, default=1e-12, metavar="TOL")
    group.add_argument("--rel-tol", type=float, default=1e-11, metavar="TOL")
    group.add_argument("--max-refinements", type=int, default=12, metavar="N")
    group.add_argument("--truncation-threshold", type=float, default=1e-15, metavar="EPS")


def _config_from(args):
    # QuadratureConfig validates; ValueError maps to a usage error in main().
    return QuadratureConfig(
        abs_tol=args.abs_tol,
        rel_tol=args.rel_tol,
        max_refinements=args.max_refinements,
        truncation_threshold=args.truncation_threshold,
    )


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="eulergamma",
        description="Evaluate gamma/beta functions and verify classical gamma identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function at given arguments")
    p_eval.add_argument("function", choices=sorted(_EVAL_ARITY))
    p_eval.add_argument("values", nargs="+", type=float, metavar="VALUE")
    p_eval.add_argument("--engine", choices=("reference", "integral"), default="reference")
    _add_config_flags(p_eval)
    p_eval.set_defaults(handler=_cmd_eval)

    p_verify = sub.add_parser("verify", help="run one identity check")
    p_verify.add_argument("identity", metavar="IDENTITY")
    for axis in _NUMERIC_AXES:
        p_verify.add_argument(f"--{axis}", type=float, default=None)
    p_verify.add_argument("--mode", choices=("closed", "quadrature"), default=None)
    p_verify.add_argument("--tol", type=float, default=None,
                          help="override the identity's default tolerance")
    _add_config_flags(p_verify)
    p_verify.set_defaults(handler=_cmd_verify)

    p_suite = sub.add_parser("suite", help="run identity checks over parameter grids")
    p_suite.add_argument("--identities", default=None, metavar="ID,ID,...",
                         help="restrict to a comma-separated subset")
    for axis in _NUMERIC_AXES:
        p_suite.add_argument(f"--{axis}", default=None, metavar="LIST",
                             help=f"override the {axis} axis: comma list and/or lo..hi ranges")
    p_suite.add_argument("--mode", default=None, metavar="MODE[,MODE]",
                         help="restrict factorial-root modes (closed, quadrature)")
    p_suite.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_suite.add_argument("--tol", action="append", default=[], metavar="ID=TOL",
                         help="per-identity tolerance override, repeatable")
    p_suite.add_argument("--out", default=None, metavar="PATH",
                         help="write the report to PATH instead of standard output")
    _add_config_flags(p_suite)
    p_suite.set_defaults(handler=_cmd_suite)

    return parser


def _cmd_eval(args, parser):
    arity = _EVAL_ARITY[args.function]
    if len(args.values) != arity:
        parser.error(f"{args.function} takes {arity} value(s), got {len(args.values)}")
    config = _config_from(args)
    estimate = None
    if args.function == "gamma":
        (x,) = args.values
        if args.engine == "reference":
            value = gamma_reference(x)
        else:
            estimate = gamma_integral(x, config)
    elif args.function == "lgamma":
        (x,) = args.values
        if args.engine == "reference":
            value = log_gamma(x)
        else:
            # no direct log-space quadrature; integrate, then take the log
            inner = gamma_integral(x, config)
            estimate = inner
            value = math.log(inner.value)
    elif args.function == "beta":
        x, y = args.values
        if args.engine == "reference":
            value = beta_closed(x, y)
        else:
            estimate = beta_integral(x, y, config)
    elif args.function == "symbol":
        p, q, n = args.values
        if args.engine == "reference":
            value = euler_symbol_closed(p, q, n)
        else:
            estimate = euler_symbol(p, q, n, config)
    else:  # loggamma_integral
        (s,) = args.values
        if not (math.isfinite(s) and s >= 0.0):
            raise DomainError("s must be nonnegative and finite")
        if args.engine == "reference":
            value = gamma_reference(s + 1.0)
        else:
            estimate = gamma_log_integral(s, config)
    if estimate is not None and args.function != "lgamma":
        value = estimate.value
    print(format(value, ".15g"))
    if estimate is not None and not estimate.converged:
        print(
            f"warning: quadrature did not converge "
            f"(error estimate {estimate.error_estimate:.3e})",
            file=sys.stderr,
        )
        return EXIT_FAIL
    return EXIT_OK


def _cmd_verify(args, parser):
    identity_id = args.identity
    if identity_id not in IDENTITIES:
        parser.error(
            f"unknown identity {identity_id!r} (known: {', '.join(sorted(IDENTITIES))})"
        )
    spec = IDENTITIES[identity_id]
    for axis in (*_NUMERIC_AXES, "mode"):
        if axis not in spec.axes and getattr(args, axis) is not None:
            parser.error(f"identity '{identity_id}' does not take --{axis}")
    params = {}
    for axis in spec.axes:
        raw = getattr(args, axis)
        if raw is None:
            if axis == "mode":
                raw = "closed"
            else:
                parser.error(f"identity '{identity_id}' requires --{axis}")
        params[axis] = spec.convert[axis](raw)
    config = _config_from(args)
    report = spec.run(params, args.tol, config)
    sys.stdout.write(render_report(report))
    return EXIT_OK if report.passed else EXIT_FAIL


def _parse_axis_values(axis, text, parser):
    """Parse `1,2.5,7` / `2..12` / mixes of both into a value list."""
    values = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            lo_text, _, hi_text = chunk.partition("..")
            try:
                lo, hi = int(lo_text), int(hi_text)
            except ValueError:
                parser.error(f"--{axis}: ranges need integer endpoints, got {chunk!r}")
            if hi < lo:
                parser.error(f"--{axis}: empty range {chunk!r}")
            values.extend(float(v) for v in range(lo, hi + 1))
        else:
            try:
                values.append(float(chunk))
            except ValueError:
                parser.error(f"--{axis}: not a number: {chunk!r}")
    return values


def _parse_tolerances(entries, parser):
    tolerances = {}
    for entry in entries:
        for piece in entry.split(","):
            name, sep, text = piece.partition("=")
            if not sep:
                parser.error(f"--tol expects ID=VALUE, got {piece!r}")
            try:
                tolerances[name.strip()] = float(text)
            except ValueError:
                parser.error(f"--tol {name}: not a number: {text!r}")
    return tolerances


def _cmd_suite(args, parser):
    identities = None
    if args.identities is not None:
        identities = [name.strip() for name in args.identities.split(",")]
    axis_values = {}
    for axis in _NUMERIC_AXES:
        raw = getattr(args, axis)
        if raw is not None:
            axis_values[axis] = _parse_axis_values(axis, raw, parser)
    if args.mode is not None:
        axis_values["mode"] = [m.strip() for m in args.mode.split(",")]
    tolerances = _parse_tolerances(args.tol, parser)
    config = _config_from(args)
    grid = build_grid(identities, axis_values)
    suite = run_suite(grid, config, tolerances)
    text = render_suite(suite, args.format)
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if suite.n_fail == 0 else EXIT_FAIL


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except (NonFiniteIntegrandError, NonIntegrableTailError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        # DomainError and config validation both land here
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
