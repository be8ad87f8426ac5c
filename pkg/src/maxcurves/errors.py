"""Exception hierarchy shared by all modules."""


class MaxCurvesError(Exception):
    """Base class for errors raised by this package."""


class InvalidPair(MaxCurvesError, ValueError):
    """(q, a1) violates q >= 2 or a1^2 <= 4q."""


class InvalidArgument(MaxCurvesError, ValueError):
    pass


class WrongClassification(MaxCurvesError, ValueError):
    """An ordinary pair was passed where a supersingular one is required, or vice versa."""


class InsufficientPrecision(MaxCurvesError, ArithmeticError):
    """The angle approximation is too coarse for the requested degree."""


class PrecisionExhausted(MaxCurvesError, ArithmeticError):
    """A sign could not be certified even at the maximum working precision."""


class InvariantViolation(MaxCurvesError, RuntimeError):
    """A proven guarantee failed on exact recomputation. Indicates a bug."""
