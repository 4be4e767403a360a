"""Exception hierarchy.

Everything raised for a violated precondition derives from ``DomainError``;
the command line maps that family to exit code 2. ``StepCapExceeded`` is kept
apart because it is not a domain violation but an exhausted budget (exit 3).
"""


class DomainError(ValueError):
    """A mathematical precondition does not hold."""


class ZeroDenominator(DomainError, ZeroDivisionError):
    pass


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class NegativeRadicand(DomainError):
    pass


class FieldMismatch(DomainError):
    """Two surds live in different quadratic fields."""


class NonPositiveInput(DomainError):
    pass


class RationalInput(DomainError):
    """A rational number was handed to the periodic (surd) expansion."""


class Inconclusive(DomainError):
    pass


class HypothesisViolated(DomainError):
    pass


class BadIndex(DomainError):
    pass


class RangeViolation(DomainError):
    pass


class UnknownProposition(DomainError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class NonPositiveArea(DomainError):
    pass


class NoSolution(DomainError):
    pass


class NotAscending(DomainError):
    pass


class NotOrdered(DomainError):
    pass


class DegenerateTriangle(DomainError):
    pass


class RightAngle(DomainError):
    pass


class StepCapExceeded(RuntimeError):
    """The iteration budget ran out before the expansion closed.

    The partial (``Truncated``) expansion is attached as ``expansion``.
    """

    def __init__(self, message, expansion=None):
        super().__init__(message)
        self.expansion = expansion


class IrrationalInput(DomainError):
    """An operation defined on rational lengths was handed a surd."""
