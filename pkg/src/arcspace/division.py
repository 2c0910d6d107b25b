"""Weierstrass division by an evaluated divisor of finite order.

Division follows the zero-constant-quotient convention: for a divisor of
order d, w = divisor * a + z with a(0) = 0 and the remainder z a
polynomial of degree <= d (one degree more than the classical convention).
Under this convention the remainder is exactly the degree-<= d jet of w,
so the (z, v) split is independent of which generator of the divisor
ideal is used; only the quotient coordinates depend on it.

Implementation: factor the divisor as t^d * u with u a unit, divide the
tail by t^d (the one precision-losing step) and multiply by u^-1, instead
of the iterated-substitution division.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndeterminateOrder, PrecisionExhausted
from .series import TruncatedSeries


@dataclass(frozen=True)
class DivisionResult:
    quotient: TruncatedSeries  # zero constant term
    remainder: TruncatedSeries  # polynomial of degree <= divisor_order
    divisor_order: int


@dataclass(frozen=True)
class VectorDivisionResult:
    quotients: list
    remainders: list
    weights: tuple
    divisor_order: int


def unit_cofactor_inverse(gval: TruncatedSeries, d: int) -> TruncatedSeries:
    """(gval / t^d)^-1, the inverse unit of the divisor."""
    return gval.shift_down(d).invert_unit()


def exact_div(w: TruncatedSeries, gval: TruncatedSeries, uinv: TruncatedSeries | None = None) -> TruncatedSeries:
    """Exact quotient w / gval for w of order >= ord(gval).

    Over a field this is division by t^d followed by the unit inverse;
    the low-order coefficient check in shift_down raises
    DivisibilityFailure for inputs outside the ideal.
    """
    d = gval.order()
    if d is None:
        raise IndeterminateOrder("divisor is zero to its precision")
    if uinv is None:
        uinv = unit_cofactor_inverse(gval, d)
    return w.shift_down(d) * uinv


def wdiv(w: TruncatedSeries, gval: TruncatedSeries) -> DivisionResult:
    """Divide w by gval: w = gval * a + z, a zero-constant, deg z <= d.

    The quotient is reported to precision prec(w) - d; the remainder keeps
    the precision of w (it is a jet of w).
    """
    if not w.zero_constant:
        raise ValueError("dividend must have zero constant term")
    d = gval.order()
    if d is None:
        raise IndeterminateOrder("divisor is zero to its precision")
    if w.prec < d:
        raise PrecisionExhausted(f"dividend precision {w.prec} below divisor order {d}")
    z = w.jet(d)
    v = w.tail(d)
    a = v.shift_down(d) * unit_cofactor_inverse(gval, d)
    return DivisionResult(quotient=a, remainder=z, divisor_order=d)


def wdiv_vector(y, gval: TruncatedSeries, weights) -> VectorDivisionResult:
    """Componentwise division of y_i by gval^(o_i).

    Remainders obey deg z_i <= o_i * d; when gval = g(y) for a polynomial
    g, the remainder vector stays on the stratum (ord g(z) = d), which the
    stratum machinery relies on.
    """
    weights = tuple(weights)
    if len(weights) != len(y):
        raise ValueError("one weight per component required")
    d = gval.order()
    if d is None:
        raise IndeterminateOrder("divisor is zero to its precision")
    quotients = []
    remainders = []
    powers: dict[int, TruncatedSeries] = {}
    for o, w in zip(weights, y):
        if o not in powers:
            powers[o] = gval**o
        res = wdiv(w, powers[o])
        quotients.append(res.quotient)
        remainders.append(res.remainder)
    return VectorDivisionResult(
        quotients=quotients, remainders=remainders, weights=weights, divisor_order=d
    )
