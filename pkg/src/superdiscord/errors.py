"""Exception hierarchy.

Validation failures derive from ``ValueError`` so callers that only care
about "bad input" can catch that.  Numerical failures inside the optimizer
derive from ``ArithmeticError``.
"""


class SQDError(Exception):
    """Base class for every error raised by this package."""

    #: stable identifier used by the command line front end
    code = "sqd_error"


class StateError(SQDError, ValueError):
    code = "invalid_state"


class NotXShaped(StateError):
    code = "not_x_shaped"


class NotHermitian(StateError):
    code = "not_hermitian"


class TraceNotOne(StateError):
    code = "trace_not_one"


class NotPositive(StateError):
    code = "not_positive"


class DomainError(SQDError, ValueError):
    code = "domain_error"


class DegenerateState(SQDError, ArithmeticError):
    code = "degenerate_state"


class DegenerateBranch(SQDError, ArithmeticError):
    """A measurement outcome has (numerically) zero probability."""

    code = "degenerate_branch"


class InvalidRegion(SQDError, ValueError):
    """(z, theta) lies outside the region allowed by state positivity."""

    code = "invalid_region"


class SingularDerivative(SQDError, ArithmeticError):
    code = "singular_derivative"


class NewtonDiverged(SQDError, ArithmeticError):
    code = "newton_diverged"


class CorollaryViolation(SQDError, AssertionError):
    """An endpoint case label disagreed with the global scan.

    This is a self-check tripwire; it should never fire on valid input.
    """

    code = "corollary_violation"
