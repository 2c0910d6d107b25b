"""Error hierarchy.

Every domain error carries a stable class name; the CLI reports that name
as its machine-readable error class.
"""


class ArcError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def error_class(self) -> str:
        return type(self).__name__


class NotAUnit(ArcError):
    """Series inversion requested for a series with zero constant term."""


class NotASquare(ArcError):
    """Square root requested where the constant term is not hint**2."""


class NonUnitRadicand(ArcError):
    """Square root requested for a series with zero constant term."""


class ArityMismatch(ArcError):
    """Polynomial arity does not match the substituted vector."""


class BadSelection(ArcError):
    """Minor column selection is not a valid k-subset."""


class InvalidWeights(ArcError):
    """Division weights violate o_i + o_j >= o_l + 1."""


class IndeterminateOrder(ArcError):
    """A divisor is zero to its stored precision; its order is unknown."""


class IndeterminateResidualOrder(ArcError):
    """A deformed divisor reduces to zero-to-precision over the base field."""


class PrecisionExhausted(ArcError):
    """Not enough stored coefficients to carry out the operation."""


class DivisibilityFailure(ArcError):
    """An exact division that is guaranteed by theory failed; indicates a
    bug in the caller or precision exhaustion, never a valid input."""


class NotOnStratum(ArcError):
    """Vector does not satisfy ord g = d for the frame's stratum."""


class NotInZdStar(ArcError):
    """Remainder vector fails the solution-bundle membership test."""


class NotASolution(ArcError):
    """Vector does not solve f = 0 to the stored precision."""


class InsufficientApproximation(ArcError):
    """ord f(ybar) <= 2d: the approximate solution is too coarse to lift."""


class NoMinor(ArcError):
    """The chosen Jacobian minor vanishes to precision at the given arc."""


class UnsupportedShape(ArcError):
    """Operation restricted to hypersurfaces (k = 1) was called with k > 1."""


class ParseError(ArcError):
    """Syntax error in a polynomial, series or system file."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
