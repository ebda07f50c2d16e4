"""Exception types shared across the library."""


class ParameterDomainError(ValueError):
    """Parameters (n, k, r) fall outside an operation's domain."""


class SizeLimitError(ValueError):
    """A dense computation would exceed the desk-scale size cap."""


class NumericFailureError(RuntimeError):
    """An eigensolver failed or a numerical invariant broke."""


class PoleError(ArithmeticError):
    """A continued-fraction denominator, or the closed-form branch factor,
    vanishes (or nearly vanishes) at the requested point."""


class PhaseConsistencyError(RuntimeError):
    """A quotient eigenvector cannot be unrolled on a short orbit.

    Raised only when a vector with a nonzero component on a short orbit
    reaches the lifting stage, which indicates a filtering bug upstream.
    """


class CountMismatchError(RuntimeError):
    """An assembled spectrum does not have the expected cardinality."""
