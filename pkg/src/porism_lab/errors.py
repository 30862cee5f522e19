"""Exception hierarchy.

Two families matter to callers: :class:`ValidationError` (bad input, e.g.
non-collinear points) and :class:`DegenerateError` (the arithmetic itself
breaks down, e.g. a zero divisor in a denominator).  The CLI maps them to
exit codes 2 and 3.
"""


class PorismError(Exception):
    """Base class for all library errors."""


class ValidationError(PorismError, ValueError):
    pass


class DegenerateError(PorismError, ArithmeticError):
    pass


class KindMismatch(ValidationError):
    pass


class InvalidBranch(ValidationError):
    pass


class OffQuadric(ValidationError):
    pass


class NotCollinear(ValidationError):
    pass


class MixedBackends(ValidationError):
    pass


class EmptyChain(ValidationError):
    pass


class OddChain(ValidationError):
    pass


class NotPseudoUnitary(PorismError, ValueError):
    pass


class ZeroDivisor(DegenerateError, ZeroDivisionError):
    pass


class NonInvertibleDenominator(DegenerateError):
    pass


class NonInvertiblePivot(DegenerateError):
    pass


class NotAReversion(DegenerateError):
    pass


class NullDirection(DegenerateError):
    pass


class CenterPole(DegenerateError):
    pass


class DegeneratePoint(DegenerateError):
    pass


class DegenerateMatrix(DegenerateError):
    pass


class PoleAtFormulaSingularity(DegenerateError):
    pass
