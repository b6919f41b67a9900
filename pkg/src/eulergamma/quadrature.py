"""Adaptive tanh-sinh quadrature.

The variable change x = mid + halfspan * tanh((pi/2) * sinh(t)) pushes the
endpoints to t = +/-infinity and makes the transformed integrand decay doubly
exponentially, so the plain trapezoid rule in t converges at near-spectral
rate even when f blows up (integrably) at an endpoint.  Refinement halves the
step h and reuses every node already evaluated: the level-j estimate is

    I_j = I_{j-1} / 2 + h_j * sum over odd k of w(k h_j) f(x(k h_j)),

and |I_j - I_{j-1}| serves as the error estimate.  Nodes beyond |t| = 6.1
carry weights below the double-precision underflow threshold and are never
visited.

Two evaluation paths share this driver.  Arbitrary callables receive plain
abscissae and nodes that round onto an endpoint are skipped.  The built-in
integrand families (see ``backend``) are evaluated from each node's exact
distance to its nearest endpoint instead, which keeps endpoint singularities
fully resolved; the gamma and beta modules rely on that path.
"""

import math
from dataclasses import dataclass
from typing import Callable

from . import backend
from .errors import DomainError, NonFiniteIntegrandError, NonIntegrableTailError

_PROBE_START = 16.0
_PROBE_LIMIT = 2.0 ** 20


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and budget for the adaptive refinement.

    abs_tol, rel_tol
        Refinement stops once the level-to-level change is at or below
        ``max(abs_tol, rel_tol * |value|)``.
    max_refinements
        Number of step halvings allowed past the coarsest level.
    truncation_threshold
        Semi-infinite integrals are cut at a point T where ``|f(T)|`` has
        fallen below this value.
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-11
    max_refinements: int = 12
    truncation_threshold: float = 1e-15

    def __post_init__(self):
        if not (self.abs_tol > 0.0 and math.isfinite(self.abs_tol)):
            raise ValueError("abs_tol must be positive and finite")
        if not (self.rel_tol > 0.0 and math.isfinite(self.rel_tol)):
            raise ValueError("rel_tol must be positive and finite")
        if not (isinstance(self.max_refinements, int) and self.max_refinements >= 1):
            raise ValueError("max_refinements must be an integer >= 1")
        if not (self.truncation_threshold > 0.0 and math.isfinite(self.truncation_threshold)):
            raise ValueError("truncation_threshold must be positive and finite")


DEFAULT_CONFIG = QuadratureConfig()


@dataclass(frozen=True)
class IntegralEstimate:
    """Result of one adaptive integration.

    ``converged`` is True exactly when ``error_estimate`` met the configured
    tolerance; a False value still carries the best estimate found.
    """

    value: float
    error_estimate: float
    evaluations: int
    converged: bool


def _refine(a, b, config, family, p0, p1, p2, f):
    """Run the level-doubling loop over (a, b); returns an IntegralEstimate."""
    h = 1.0
    s, n = backend.level_sum(a, b, h, False, family, p0, p1, p2, f)
    value = h * s
    evaluations = n
    error = math.inf
    converged = False
    for _ in range(config.max_refinements):
        h *= 0.5
        s, n = backend.level_sum(a, b, h, True, family, p0, p1, p2, f)
        new_value = 0.5 * value + h * s
        evaluations += n
        error = abs(new_value - value)
        value = new_value
        if error <= max(config.abs_tol, config.rel_tol * abs(value)):
            converged = True
            break
    return IntegralEstimate(value, error, evaluations, converged)


def integrate_finite(f: Callable[[float], float], a: float, b: float,
                     config: QuadratureConfig = DEFAULT_CONFIG) -> IntegralEstimate:
    """Integrate ``f`` over the finite interval (a, b).

    ``f`` must be finite at every interior node; integrable endpoint
    singularities are fine because the endpoints themselves are never
    evaluated.  Raises NonFiniteIntegrandError if ``f`` returns NaN or an
    infinity, and DomainError for a degenerate interval.
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("integration bounds must be finite")
    if not a < b:
        raise DomainError("integration bounds must satisfy a < b")
    return _refine(a, b, config, backend.GENERIC, 0.0, 0.0, 0.0, f)


def integrate_semi_infinite(f: Callable[[float], float], a: float,
                            config: QuadratureConfig = DEFAULT_CONFIG) -> IntegralEstimate:
    """Integrate ``f`` over (a, infinity) by truncating where ``f`` has decayed.

    The cut point T is found by doubling from 16 until ``|f(a + T)|`` drops
    below ``config.truncation_threshold``; a bound for the discarded tail is
    folded into ``error_estimate``.  Raises NonIntegrableTailError when no
    such T exists below the probing budget.
    """
    if not math.isfinite(a):
        raise DomainError("lower bound must be finite")
    shifted = f if a == 0.0 else (lambda u: f(a + u))
    span, tail = _truncation_span(shifted, config.truncation_threshold)
    base = _refine(0.0, span, config, backend.GENERIC, 0.0, 0.0, 0.0, shifted)
    return _with_tail(base, tail, config)


def _truncation_span(value_at, threshold):
    """Double T from 16 until |value_at(T)| < threshold; return (T, tail bound)."""
    span = _PROBE_START
    while span <= _PROBE_LIMIT:
        v = value_at(span)
        if math.isnan(v):
            raise NonFiniteIntegrandError("integrand not finite")
        if abs(v) < threshold:
            # Crude but safe for the decay rates seen here: the tail mass of
            # anything falling at least as fast as exp(-u/T) past T is below
            # |f(T)| * T.
            return span, abs(v) * span
        span *= 2.0
    raise NonIntegrableTailError("tail not integrable at configured threshold")


def _with_tail(base, tail, config):
    error = base.error_estimate + tail
    converged = error <= max(config.abs_tol, config.rel_tol * abs(base.value))
    return IntegralEstimate(base.value, error, base.evaluations, converged)


def _integrate_family(family, p0, p1, p2, a, b, config):
    """Driver for the built-in integrand families over a finite interval."""
    return _refine(a, b, config, family, p0, p1, p2, None)


def _integrate_family_semi_infinite(family, p0, p1, p2, config):
    """Driver for built-in families over (0, infinity)."""
    span, tail = _truncation_span(
        lambda u: backend.point_value(family, p0, p1, p2, u),
        config.truncation_threshold,
    )
    base = _refine(0.0, span, config, family, p0, p1, p2, None)
    return _with_tail(base, tail, config)
