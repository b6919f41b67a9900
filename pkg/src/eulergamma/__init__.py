"""Gamma and Beta function engines with a verifiable identity suite.

Closed-form evaluation (Lanczos) and integral evaluation (tanh-sinh
quadrature) of the gamma family, plus checks that certify the classical
product identities relating them.  ``backend.BACKEND`` names the node-loop
implementation in use ("compiled" or "python").
"""

from .backend import BACKEND
from .beta import (
    BetaArgs,
    EulerSymbolParams,
    beta_closed,
    beta_integral,
    euler_symbol,
    euler_symbol_closed,
)
from .errors import DomainError, NonFiniteIntegrandError, NonIntegrableTailError
from .gamma import (
    GammaArg,
    factorial_interp,
    gamma_integral,
    gamma_log_integral,
    gamma_reference,
    log_gamma,
)
from .identities import (
    IDENTITIES,
    IdentityReport,
    SuiteReport,
    check_algebraic_interpolation,
    check_duplication,
    check_factorial_root,
    check_gamma_fraction_product,
    check_gamma_square_product,
    check_gauss_multiplication,
    check_log_integral_product,
    check_reflection,
    check_sine_multiple_angle,
    check_sine_product,
    check_symbol_bridge,
    check_symbol_symmetry,
    default_grid,
    default_tolerance,
    derivation_chain_values,
    run_suite,
)
from .quadrature import (
    DEFAULT_CONFIG,
    IntegralEstimate,
    QuadratureConfig,
    integrate_finite,
    integrate_semi_infinite,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BetaArgs",
    "DEFAULT_CONFIG",
    "DomainError",
    "EulerSymbolParams",
    "GammaArg",
    "IDENTITIES",
    "IdentityReport",
    "IntegralEstimate",
    "NonFiniteIntegrandError",
    "NonIntegrableTailError",
    "QuadratureConfig",
    "SuiteReport",
    "beta_closed",
    "beta_integral",
    "check_algebraic_interpolation",
    "check_duplication",
    "check_factorial_root",
    "check_gamma_fraction_product",
    "check_gamma_square_product",
    "check_gauss_multiplication",
    "check_log_integral_product",
    "check_reflection",
    "check_sine_multiple_angle",
    "check_sine_product",
    "check_symbol_bridge",
    "check_symbol_symmetry",
    "default_grid",
    "default_tolerance",
    "derivation_chain_values",
    "euler_symbol",
    "euler_symbol_closed",
    "factorial_interp",
    "gamma_integral",
    "gamma_log_integral",
    "gamma_reference",
    "integrate_finite",
    "integrate_semi_infinite",
    "log_gamma",
    "run_suite",
    "__version__",
]
