"""Exception types shared across the package.

The CLI maps PreconditionError to exit code 2 and NonconvergenceError to
exit code 3; everything else is an ordinary crash.
"""


class RieszsumError(Exception):
    """Base class for errors raised by this package."""


class PreconditionError(RieszsumError, ValueError):
    """An operation was called outside its documented domain."""


class NearPoleError(PreconditionError):
    """Evaluation was requested too close to a pole; use the residue or
    the regularized/Laurent helpers instead."""


class NonconvergenceError(RieszsumError, ArithmeticError):
    """A numerical scheme could not reach the requested tolerance."""
