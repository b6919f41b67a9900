"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NonFiniteIntegrandError(ValueError):
    """The integrand returned NaN or infinity at an interior node."""


class NonIntegrableTailError(ValueError):
    """No decay below the truncation threshold was found within the probing budget."""
