"""Exception types shared across the package."""


class DressRingError(Exception):
    """Base class for all library errors."""


class ZeroDenominatorError(DressRingError, ZeroDivisionError):
    """A rational function was built with, or reduced to, a zero denominator."""


class ZeroPolynomialError(DressRingError, ValueError):
    """An operation that needs a nonzero polynomial received the zero polynomial."""


class NotInDressRing(DressRingError, ValueError):
    """A rational function failed a membership check for the ring.

    ``reason`` is one of ``"denominator-has-real-roots"`` or ``"positive-degree"``.
    """

    def __init__(self, value, reason: str):
        self.value = value
        self.reason = reason
        super().__init__(f"{value} is not in the ring: {reason}")


class CertificatePreconditionError(DressRingError, ValueError):
    """Inputs to the positivity certificate violate its hypotheses."""


class HypothesisNotMet(DressRingError, ValueError):
    """No factorization branch applies to the given row matrix.

    Carries the computed sign patterns and degree data so callers can report
    exactly which hypothesis failed.
    """

    def __init__(self, message: str, *, sign_q_at_p=None, sign_p_at_q=None,
                 deg_p=None, deg_q=None):
        self.sign_q_at_p = sign_q_at_p
        self.sign_p_at_q = sign_p_at_q
        self.deg_p = deg_p
        self.deg_q = deg_q
        super().__init__(message)


class ShapeViolation(DressRingError, ValueError):
    """A matrix or generator list does not have the shape an operation requires."""


class IndeterminateSeriesError(DressRingError, ValueError):
    """A truncated series is zero to its precision but was not declared zero."""


class InternalSearchError(DressRingError, RuntimeError):
    """A search loop exceeded its iteration cap.

    Termination of every search in this package is guaranteed mathematically,
    so hitting this error indicates an implementation bug, not bad input.
    """


class ParseError(DressRingError, ValueError):
    """Syntax error in the expression language. ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (offset {position})")
