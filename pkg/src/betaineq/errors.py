"""Exception hierarchy shared by the library and the CLI."""


class BetaIneqError(Exception):
    """Base class for all library errors."""


class DomainError(BetaIneqError, ValueError):
    """Arguments fall outside the region where a quantity is defined."""


class NumericalError(BetaIneqError, ArithmeticError):
    """A numerical procedure failed to reach its accuracy target.

    ``estimate`` and ``error`` carry the last iterate so callers can decide
    whether it is still usable.
    """

    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class ConfigurationError(BetaIneqError):
    """A sampling or run configuration cannot be satisfied."""


class UsageError(BetaIneqError):
    """Caller combined incompatible arguments (e.g. mismatched targets)."""
