"""Exception hierarchy shared by every module of the package."""


class NCABError(Exception):
    """Base class for all package errors."""


class DomainError(NCABError, ValueError):
    """An argument lies outside the domain of an operation."""


class RegionError(DomainError):
    """A field was evaluated outside the region where it is defined."""


class ValidationError(NCABError, ValueError):
    """A parameter set or scenario violates one of its invariants."""


class ConvergenceError(NCABError, ArithmeticError):
    """Adaptive quadrature did not reach the requested tolerance.

    The best estimate and its error bound are kept so callers can decide
    whether the partial result is usable.
    """

    def __init__(self, message, estimate, error_bound):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound


class InvariantError(NCABError, RuntimeError):
    """An internal consistency check failed."""
