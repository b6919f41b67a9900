"""Classical gamma-function identities as checkable LHS/RHS pairs.

Every check evaluates both sides of one identity independently, measures the
residual, and returns an IdentityReport; run_suite drives all checks over
parameter grids and aggregates.  Conventions shared by all checks:

* Products of gamma values and powers of n are accumulated in log space with
  ``math.fsum`` (exactly rounded, hence independent of term order); direct
  products would overflow binary64 once n*x grows past ~170.
* Identities that are pure gamma products (gauss-multiplication, duplication,
  gamma-fraction-product, gamma-square-product) report lhs/rhs as the natural
  logs of the two sides and their residuals are log-space residuals.  All
  other checks report linear values.
* n-th roots are computed as exp(log/n); every radicand on the supported
  domain is a product of positive reals, so there is no branch to pick.
* rel_residual = |lhs - rhs| / max(|lhs|, |rhs|, 1e-300).  A check passes
  when rel_residual <= tolerance, except that sides both within 1e-6 of zero
  are compared absolutely (relative error is meaningless at a zero of the
  identity).
* Checks that integrate also require every quadrature to have converged;
  a nonconverged estimate fails the report even if the residual looks small.
"""

import itertools
import math
import time
from dataclasses import dataclass, replace
from typing import Callable, Mapping

from .beta import euler_symbol, euler_symbol_closed
from .errors import DomainError
from .gamma import factorial_interp, gamma_reference, gamma_log_integral, log_gamma
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, _integrate_family
from . import backend

_LN_2 = math.log(2.0)
_LN_PI = math.log(math.pi)
_LN_2PI = math.log(math.tau)

# Sides this close to zero switch the pass rule to absolute residual.
NEAR_ZERO = 1e-6
_TINY = 1e-300

# Closed-form-only identities run at 1e-10; one layer of quadrature loosens
# that to 1e-7; the algebraic interpolation chains q-1 quadratures and gets
# 1e-6.  Conservative multiples of observed engine accuracy.
_DEFAULT_TOL = {
    "reflection": 1e-12,
    "gauss-multiplication": 1e-10,
    "duplication": 1e-10,
    "sine-product": 1e-10,
    "sine-multiple-angle": 1e-10,
    "gamma-square-product": 1e-10,
    "gamma-fraction-product": 1e-10,
    "log-integral-product": 1e-7,
    "factorial-root": 1e-10,
    "algebraic-interpolation": 1e-6,
    "symbol-symmetry": 1e-7,
    "symbol-bridge": 1e-7,
}


def default_tolerance(identity_id: str, mode: str = "closed") -> float:
    """The built-in pass tolerance for one identity (mode-aware)."""
    if identity_id == "factorial-root" and mode == "quadrature":
        return 1e-7
    try:
        return _DEFAULT_TOL[identity_id]
    except KeyError:
        raise DomainError(f"unknown identity {identity_id!r}") from None


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one identity at one parameter point."""

    identity_id: str
    params: Mapping[str, object]
    lhs: float
    rhs: float
    abs_residual: float
    rel_residual: float
    tolerance: float
    passed: bool
    wall_time: float


@dataclass(frozen=True)
class SuiteReport:
    """All reports of one suite run, in deterministic order."""

    reports: tuple
    n_pass: int
    n_fail: int
    config_echo: Mapping[str, object]


def _rel(lhs, rhs):
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), _TINY)


def _report(identity_id, params, lhs, rhs, tolerance, start, aux_ok=True):
    """Assemble a report; ``aux_ok`` folds in side conditions (quadrature
    convergence, secondary-form agreement) that must hold for a pass."""
    abs_residual = abs(lhs - rhs)
    rel_residual = abs_residual / max(abs(lhs), abs(rhs), _TINY)
    if max(abs(lhs), abs(rhs)) <= NEAR_ZERO:
        passed = abs_residual <= tolerance
    else:
        passed = rel_residual <= tolerance
    passed = bool(passed and aux_ok and math.isfinite(lhs) and math.isfinite(rhs))
    return IdentityReport(
        identity_id=identity_id,
        params=params,
        lhs=lhs,
        rhs=rhs,
        abs_residual=abs_residual,
        rel_residual=rel_residual,
        tolerance=tolerance,
        passed=passed,
        wall_time=time.perf_counter() - start,
    )


def _positive(value, name):
    value = float(value)
    if not (math.isfinite(value) and value > 0.0):
        raise DomainError(f"{name} must be positive and finite")
    return value


def _integer(value, name, minimum):
    as_float = float(value)
    as_int = int(as_float)
    if as_int != as_float:
        raise DomainError(f"{name} must be an integer")
    if as_int < minimum:
        raise DomainError(f"{name} must be >= {minimum}")
    return as_int


def check_reflection(x: float, tolerance: float | None = None) -> IdentityReport:
    """gamma(x) * gamma(1-x) = pi / sin(pi x), for x in (0, 1).

    The report carries the gamma form.  The equivalent factorial form
    x! * (-x)! = pi x / sin(pi x) is cross-checked against the same
    tolerance; a pass certifies both.
    """
    start = time.perf_counter()
    x = float(x)
    if not (math.isfinite(x) and 0.0 < x < 1.0):
        raise DomainError("x must lie in (0,1)")
    if tolerance is None:
        tolerance = default_tolerance("reflection")
    lhs = gamma_reference(x) * gamma_reference(1.0 - x)
    rhs = math.pi / math.sin(math.pi * x)
    fact_lhs = factorial_interp(x) * factorial_interp(-x)
    fact_rhs = math.pi * x / math.sin(math.pi * x)
    fact_ok = _rel(fact_lhs, fact_rhs) <= tolerance
    return _report("reflection", {"x": x}, lhs, rhs, tolerance, start, aux_ok=fact_ok)


def check_gauss_multiplication(x: float, n: int,
                               tolerance: float | None = None) -> IdentityReport:
    """gamma(x/n) gamma((x+1)/n) ... gamma((x+n-1)/n) = (2 pi)^((n-1)/2) n^(1/2-x) gamma(x).

    Compared in log space; lhs/rhs are the logs of the two sides.  n = 1
    degenerates to gamma(x) = gamma(x).
    """
    start = time.perf_counter()
    x = _positive(x, "x")
    n = _integer(n, "n", 1)
    if tolerance is None:
        tolerance = default_tolerance("gauss-multiplication")
    lhs = math.fsum(log_gamma((x + k) / n) for k in range(n))
    rhs = math.fsum([0.5 * (n - 1) * _LN_2PI, (0.5 - x) * math.log(n), log_gamma(x)])
    return _report("gauss-multiplication", {"n": n, "x": x}, lhs, rhs, tolerance, start)


def check_duplication(x: float, tolerance: float | None = None) -> IdentityReport:
    """gamma(x/2) gamma((x+1)/2) = (2 pi)^(1/2) 2^(1/2-x) gamma(x).

    The n = 2 instance of the multiplication formula; the delegation makes
    the two checks agree bit for bit.
    """
    start = time.perf_counter()
    inner = check_gauss_multiplication(x, 2, tolerance=tolerance)
    return replace(
        inner,
        identity_id="duplication",
        params={"x": float(x)},
        wall_time=time.perf_counter() - start,
    )


def check_sine_product(n: int, tolerance: float | None = None) -> IdentityReport:
    """sin(pi/n) sin(2 pi/n) ... sin((n-1) pi/n) = n / 2^(n-1), for n >= 2."""
    start = time.perf_counter()
    n = _integer(n, "n", 2)
    if tolerance is None:
        tolerance = default_tolerance("sine-product")
    lhs = math.exp(math.fsum(math.log(math.sin(i * math.pi / n)) for i in range(1, n)))
    rhs = n * 2.0 ** (1 - n)
    return _report("sine-product", {"n": n}, lhs, rhs, tolerance, start)


def check_sine_multiple_angle(n: int, phi: float,
                              tolerance: float | None = None) -> IdentityReport:
    """sin(n phi) = 2^(n-1) * product over k in 0..n-1 of sin(phi + k pi/n).

    The uniform product runs over phi + k pi/n; the alternating-sign pairing
    seen in older statements is the same thing because
    sin((n-k) pi/n + phi) = sin(k pi/n - phi).  Factors may be negative, so
    the sign is tracked separately from the log-space magnitude.
    """
    start = time.perf_counter()
    n = _integer(n, "n", 1)
    phi = float(phi)
    if not math.isfinite(phi):
        raise DomainError("phi must be finite")
    if tolerance is None:
        tolerance = default_tolerance("sine-multiple-angle")
    lhs = math.sin(n * phi)
    factors = [math.sin(phi + k * math.pi / n) for k in range(n)]
    if any(f == 0.0 for f in factors):
        rhs = 0.0
    else:
        sign = -1.0 if sum(f < 0.0 for f in factors) % 2 else 1.0
        rhs = sign * math.exp(
            math.fsum([(n - 1) * _LN_2] + [math.log(abs(f)) for f in factors])
        )
    return _report("sine-multiple-angle", {"n": n, "phi": phi}, lhs, rhs, tolerance, start)


def check_gamma_square_product(n: int, tolerance: float | None = None) -> IdentityReport:
    """product of gamma(i/n)^2 over i in 1..n-1 = pi^(n-1) / product of sin(i pi/n).

    Compared in log space; lhs/rhs are the logs of the two sides.
    """
    start = time.perf_counter()
    n = _integer(n, "n", 2)
    if tolerance is None:
        tolerance = default_tolerance("gamma-square-product")
    lhs = math.fsum(2.0 * log_gamma(i / n) for i in range(1, n))
    rhs = math.fsum(
        [(n - 1) * _LN_PI] + [-math.log(math.sin(i * math.pi / n)) for i in range(1, n)]
    )
    return _report("gamma-square-product", {"n": n}, lhs, rhs, tolerance, start)


def check_gamma_fraction_product(n: int, tolerance: float | None = None) -> IdentityReport:
    """gamma(1/n) gamma(2/n) ... gamma((n-1)/n) = sqrt((2 pi)^(n-1) / n).

    Compared in log space; lhs/rhs are the logs of the two sides.
    """
    start = time.perf_counter()
    n = _integer(n, "n", 2)
    if tolerance is None:
        tolerance = default_tolerance("gamma-fraction-product")
    lhs = math.fsum(log_gamma(i / n) for i in range(1, n))
    rhs = math.fsum([0.5 * (n - 1) * _LN_2PI, -0.5 * math.log(n)])
    return _report("gamma-fraction-product", {"n": n}, lhs, rhs, tolerance, start)


def check_log_integral_product(n: int, config: QuadratureConfig = DEFAULT_CONFIG,
                               tolerance: float | None = None) -> IdentityReport:
    """product over k in 1..n-1 of integral_0^1 (-log x)^(k/n) dx
    = ((n-1)!/n^(n-1)) sqrt(2^(n-1) pi^(n-1) / n), for n >= 2.

    The left side is n-1 independent quadratures, multiplied in log space.
    """
    start = time.perf_counter()
    n = _integer(n, "n", 2)
    if tolerance is None:
        tolerance = default_tolerance("log-integral-product")
    estimates = [gamma_log_integral(k / n, config) for k in range(1, n)]
    converged = all(e.converged for e in estimates)
    lhs = math.exp(math.fsum(math.log(e.value) for e in estimates))
    rhs = math.exp(
        math.fsum(
            [
                log_gamma(float(n)),
                -(n - 1) * math.log(n),
                0.5 * (n - 1) * _LN_2,
                0.5 * (n - 1) * _LN_PI,
                -0.5 * math.log(n),
            ]
        )
    )
    return _report("log-integral-product", {"n": n}, lhs, rhs, tolerance, start, converged)


def _factorial_root_log_inner(m, n, mode, config):
    """Log of the radicand n^(n-m) gamma(m) S(1,m;n) S(2,m;n) ... S(n-1,m;n).

    Returns (log terms, all quadratures converged).  In closed mode each
    symbol contributes through B(i/n, m/n)/n; in quadrature mode it is
    integrated directly.
    """
    terms = [(n - m) * math.log(n), log_gamma(m)]
    converged = True
    for i in range(1, n):
        if mode == "closed":
            terms += [
                log_gamma(i / n),
                log_gamma(m / n),
                -log_gamma((i + m) / n),
                -math.log(n),
            ]
        else:
            estimate = euler_symbol(float(i), m, n, config)
            converged = converged and estimate.converged
            terms.append(math.log(estimate.value))
    return terms, converged


def check_factorial_root(m: float, n: int, mode: str = "closed",
                         config: QuadratureConfig = DEFAULT_CONFIG,
                         tolerance: float | None = None) -> IdentityReport:
    """(m/n)! = (m/n) (n^(n-m) gamma(m) S(1,m;n) ... S(n-1,m;n))^(1/n).

    The n-th-root reconstruction of the interpolated factorial from Euler
    symbols S(i, m; n); gamma(m) interpolates the (m-1)! that a natural m
    would contribute, and the formula holds for real m > 0.  In closed mode
    the symbols come from the Beta closed form, in quadrature mode from
    direct integration.
    """
    start = time.perf_counter()
    m = _positive(m, "m")
    n = _integer(n, "n", 1)
    if mode not in ("closed", "quadrature"):
        raise DomainError("mode must be 'closed' or 'quadrature'")
    if tolerance is None:
        tolerance = default_tolerance("factorial-root", mode)
    lhs = factorial_interp(m / n)
    terms, converged = _factorial_root_log_inner(m, n, mode, config)
    rhs = (m / n) * math.exp(math.fsum(terms) / n)
    params = {"m": m, "n": n, "mode": mode}
    return _report("factorial-root", params, lhs, rhs, tolerance, start, converged)


def check_algebraic_interpolation(p: int, q: int,
                                  config: QuadratureConfig = DEFAULT_CONFIG,
                                  tolerance: float | None = None) -> IdentityReport:
    """integral_0^1 (-log x)^(p/q) dx
    = (p! (2p/q+1)(3p/q+1)...(qp/q+1))^(1/q) * (prod_k integral_0^1 (x^k - x^(k+1))^(p/q) dx)^(1/q)

    with k running 1..q-1; natural p, q.  The left side is one quadrature and
    the right side chains q-1 more, so this is the loosest check in the set.
    """
    start = time.perf_counter()
    p = _integer(p, "p", 1)
    q = _integer(q, "q", 1)
    if tolerance is None:
        tolerance = default_tolerance("algebraic-interpolation")
    s = p / q
    lhs_estimate = gamma_log_integral(s, config)
    converged = lhs_estimate.converged
    lhs = lhs_estimate.value
    terms = [log_gamma(p + 1.0)]
    terms += [math.log(j * s + 1.0) for j in range(2, q + 1)]
    for k in range(1, q):
        estimate = _integrate_family(backend.ALGEBRAIC, float(k), s, 0.0, 0.0, 1.0, config)
        converged = converged and estimate.converged
        terms.append(math.log(estimate.value))
    rhs = math.exp(math.fsum(terms) / q)
    return _report("algebraic-interpolation", {"p": p, "q": q}, lhs, rhs, tolerance,
                   start, converged)


def check_symbol_symmetry(p: float, q: float, n: int,
                          config: QuadratureConfig = DEFAULT_CONFIG,
                          tolerance: float | None = None) -> IdentityReport:
    """S(p, q; n) = S(q, p; n), both sides by direct quadrature."""
    start = time.perf_counter()
    if tolerance is None:
        tolerance = default_tolerance("symbol-symmetry")
    a = euler_symbol(p, q, n, config)
    b = euler_symbol(q, p, n, config)
    params = {"n": _integer(n, "n", 1), "p": float(p), "q": float(q)}
    return _report("symbol-symmetry", params, a.value, b.value, tolerance, start,
                   a.converged and b.converged)


def check_symbol_bridge(p: float, q: float, n: int,
                        config: QuadratureConfig = DEFAULT_CONFIG,
                        tolerance: float | None = None) -> IdentityReport:
    """S(p, q; n) by quadrature = B(p/n, q/n)/n in closed form."""
    start = time.perf_counter()
    if tolerance is None:
        tolerance = default_tolerance("symbol-bridge")
    estimate = euler_symbol(p, q, n, config)
    rhs = euler_symbol_closed(p, q, n)
    params = {"n": _integer(n, "n", 1), "p": float(p), "q": float(q)}
    return _report("symbol-bridge", params, estimate.value, rhs, tolerance, start,
                   estimate.converged)


def derivation_chain_values(m: float, n: int) -> tuple:
    """Three independent routes to (m/n)!, for cross-validation.

    Returns (direct, root_form, product_form):
      direct       gamma(m/n + 1) from the reference engine;
      root_form    the factorial-root right side in closed mode;
      product_form (m/n) gamma(m) n^(1-m) * prod_k gamma(k/n)/gamma((m+k)/n),
                   i.e. the multiplication formula rearranged for gamma(m/n)
                   with (2 pi)^((n-1)/2) eliminated through the fraction
                   product gamma(1/n)...gamma((n-1)/n) = sqrt((2 pi)^(n-1)/n).

    Pairwise agreement of the three certifies that the factorial-root
    identity plus the fraction product imply the multiplication formula.
    """
    m = _positive(m, "m")
    n = _integer(n, "n", 1)
    direct = factorial_interp(m / n)
    terms, _ = _factorial_root_log_inner(m, n, "closed", DEFAULT_CONFIG)
    root_form = (m / n) * math.exp(math.fsum(terms) / n)
    product_terms = [math.log(m / n), log_gamma(m), (1.0 - m) * math.log(n)]
    for k in range(1, n):
        product_terms += [log_gamma(k / n), -log_gamma((m + k) / n)]
    product_form = math.exp(math.fsum(product_terms))
    return direct, root_form, product_form


def _float_axis(value):
    value = float(value)
    if not math.isfinite(value):
        raise DomainError("parameter must be finite")
    return value


def _int_axis(value):
    as_float = float(value)
    as_int = int(as_float)
    if as_int != as_float:
        raise DomainError(f"expected an integer, got {value!r}")
    return as_int


def _mode_axis(value):
    mode = str(value)
    if mode not in ("closed", "quadrature"):
        raise DomainError("mode must be 'closed' or 'quadrature'")
    return mode


@dataclass(frozen=True)
class IdentitySpec:
    """Wiring for one identity: its parameter axes and a run adapter."""

    identity_id: str
    axes: tuple
    convert: Mapping[str, Callable]
    run: Callable


IDENTITIES = {
    "reflection": IdentitySpec(
        "reflection", ("x",), {"x": _float_axis},
        lambda params, tol, config: check_reflection(params["x"], tolerance=tol),
    ),
    "gauss-multiplication": IdentitySpec(
        "gauss-multiplication", ("n", "x"), {"n": _int_axis, "x": _float_axis},
        lambda params, tol, config: check_gauss_multiplication(
            params["x"], params["n"], tolerance=tol),
    ),
    "duplication": IdentitySpec(
        "duplication", ("x",), {"x": _float_axis},
        lambda params, tol, config: check_duplication(params["x"], tolerance=tol),
    ),
    "sine-product": IdentitySpec(
        "sine-product", ("n",), {"n": _int_axis},
        lambda params, tol, config: check_sine_product(params["n"], tolerance=tol),
    ),
    "sine-multiple-angle": IdentitySpec(
        "sine-multiple-angle", ("n", "phi"), {"n": _int_axis, "phi": _float_axis},
        lambda params, tol, config: check_sine_multiple_angle(
            params["n"], params["phi"], tolerance=tol),
    ),
    "gamma-square-product": IdentitySpec(
        "gamma-square-product", ("n",), {"n": _int_axis},
        lambda params, tol, config: check_gamma_square_product(params["n"], tolerance=tol),
    ),
    "gamma-fraction-product": IdentitySpec(
        "gamma-fraction-product", ("n",), {"n": _int_axis},
        lambda params, tol, config: check_gamma_fraction_product(params["n"], tolerance=tol),
    ),
    "log-integral-product": IdentitySpec(
        "log-integral-product", ("n",), {"n": _int_axis},
        lambda params, tol, config: check_log_integral_product(
            params["n"], config, tolerance=tol),
    ),
    "factorial-root": IdentitySpec(
        "factorial-root", ("m", "n", "mode"),
        {"m": _float_axis, "n": _int_axis, "mode": _mode_axis},
        lambda params, tol, config: check_factorial_root(
            params["m"], params["n"], params["mode"], config, tolerance=tol),
    ),
    "algebraic-interpolation": IdentitySpec(
        "algebraic-interpolation", ("p", "q"), {"p": _int_axis, "q": _int_axis},
        lambda params, tol, config: check_algebraic_interpolation(
            params["p"], params["q"], config, tolerance=tol),
    ),
    "symbol-symmetry": IdentitySpec(
        "symbol-symmetry", ("p", "q", "n"),
        {"p": _float_axis, "q": _float_axis, "n": _int_axis},
        lambda params, tol, config: check_symbol_symmetry(
            params["p"], params["q"], params["n"], config, tolerance=tol),
    ),
    "symbol-bridge": IdentitySpec(
        "symbol-bridge", ("p", "q", "n"),
        {"p": _float_axis, "q": _float_axis, "n": _int_axis},
        lambda params, tol, config: check_symbol_bridge(
            params["p"], params["q"], params["n"], config, tolerance=tol),
    ),
}

# Default parameter grids, as blocks of axis lists expanded by product.  An
# identity may have several blocks (factorial-root runs a wide closed-mode
# grid and a smaller quadrature-mode one).
_GRID_BLOCKS = {
    "reflection": [
        {"x": sorted(set(i / 20 for i in range(1, 20)) | {1 / 2, 1 / 3, 1 / 4})},
    ],
    "gauss-multiplication": [
        {"n": list(range(1, 13)), "x": [0.1, 0.5, 1.0, 2.5, 7.0, 19.3, 50.0]},
    ],
    "duplication": [
        {"x": [0.1, 0.5, 1.0, 2.5, 7.0, 19.3, 50.0]},
    ],
    "sine-product": [{"n": list(range(2, 31))}],
    "sine-multiple-angle": [
        {"n": list(range(1, 11)), "phi": [0.3, 0.7, 1.1]},
    ],
    "gamma-square-product": [{"n": list(range(2, 26))}],
    "gamma-fraction-product": [{"n": list(range(2, 51))}],
    "log-integral-product": [{"n": list(range(2, 9))}],
    "factorial-root": [
        {
            "m": [float(m) for m in range(1, 11)] + [0.5, 7.3, 19.9],
            "n": list(range(1, 9)),
            "mode": ["closed"],
        },
        {
            "m": [float(m) for m in range(1, 6)],
            "n": list(range(2, 6)),
            "mode": ["quadrature"],
        },
    ],
    "algebraic-interpolation": [
        {"p": [1, 2, 3, 4], "q": [1, 2, 3, 4]},
    ],
    "symbol-symmetry": [
        {
            "p": [1.0, 2.0, 3.0, 4.0, 5.0],
            "q": [1.0, 2.0, 3.0, 4.0, 5.0],
            "n": [2, 3, 4, 5, 6],
        },
    ],
    "symbol-bridge": [
        {
            "p": [1.0, 2.0, 3.0, 4.0, 5.0],
            "q": [1.0, 2.0, 3.0, 4.0, 5.0],
            "n": [2, 3, 4, 5, 6],
        },
    ],
}


def params_key(params: Mapping) -> tuple:
    """Deterministic sort key: (name, value) pairs ordered by name."""
    return tuple(sorted(params.items()))


def build_grid(identities=None, axis_values=None) -> dict:
    """Expand the default grid blocks into per-identity parameter lists.

    ``identities`` restricts to a subset; ``axis_values`` maps an axis name
    to a replacement value list that overrides the default wherever that
    axis occurs.  Duplicate parameter points collapse to one.
    """
    if identities is None:
        identities = sorted(_GRID_BLOCKS)
    axis_values = axis_values or {}
    grid = {}
    for identity_id in identities:
        if identity_id not in IDENTITIES:
            raise DomainError(f"unknown identity {identity_id!r}")
        spec = IDENTITIES[identity_id]
        cases, seen = [], set()
        for block in _GRID_BLOCKS[identity_id]:
            axes = []
            for axis in spec.axes:
                raw = axis_values.get(axis, block[axis])
                axes.append([spec.convert[axis](v) for v in raw])
            for combo in itertools.product(*axes):
                params = dict(zip(spec.axes, combo))
                key = params_key(params)
                if key not in seen:
                    seen.add(key)
                    cases.append(params)
        grid[identity_id] = cases
    return grid


def default_grid() -> dict:
    """The full built-in parameter grid, one list of param dicts per identity."""
    return build_grid()


def run_suite(grid: dict | None = None,
              config: QuadratureConfig = DEFAULT_CONFIG,
              tolerances: Mapping[str, float] | None = None) -> SuiteReport:
    """Run every check in ``grid`` (default: the full built-in grid).

    Reports come back sorted by identity_id, then by parameter values, no
    matter the order of the input.  A check that raises is recorded as a
    failed report with NaN sides rather than aborting the suite.
    """
    if grid is None:
        grid = default_grid()
    tolerances = dict(tolerances or {})
    for identity_id in tolerances:
        if identity_id not in IDENTITIES:
            raise DomainError(f"unknown identity {identity_id!r}")
    if not any(grid.values()):
        raise DomainError("grid is empty")
    reports = []
    for identity_id in sorted(grid):
        if identity_id not in IDENTITIES:
            raise DomainError(f"unknown identity {identity_id!r}")
        spec = IDENTITIES[identity_id]
        tol = tolerances.get(identity_id)
        for params in sorted(grid[identity_id], key=params_key):
            start = time.perf_counter()
            try:
                report = spec.run(params, tol, config)
            except Exception:
                mode = params.get("mode", "closed")
                tolerance = tol if tol is not None else default_tolerance(identity_id, mode)
                report = IdentityReport(
                    identity_id=identity_id,
                    params=dict(params),
                    lhs=math.nan,
                    rhs=math.nan,
                    abs_residual=math.inf,
                    rel_residual=math.inf,
                    tolerance=tolerance,
                    passed=False,
                    wall_time=time.perf_counter() - start,
                )
            reports.append(report)
    n_pass = sum(1 for r in reports if r.passed)
    config_echo = {
        "abs_tol": config.abs_tol,
        "rel_tol": config.rel_tol,
        "max_refinements": config.max_refinements,
        "truncation_threshold": config.truncation_threshold,
        "grid": {identity_id: len(grid[identity_id]) for identity_id in sorted(grid)},
    }
    return SuiteReport(tuple(reports), n_pass, len(reports) - n_pass, config_echo)
