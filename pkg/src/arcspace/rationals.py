"""Exact rational coefficients.

All arithmetic in this package is exact over Q; truncation of power series
is the only approximation anywhere.  ``Q`` is gmpy2's mpq when available
(much faster on the coefficient sizes we produce) and otherwise the stdlib
Fraction.  Both normalize to lowest terms with positive denominator.
"""

from __future__ import annotations

from math import isqrt

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Q

QZERO = Q(0)
QONE = Q(1)


def is_rational(x) -> bool:
    return isinstance(x, type(QZERO))


def rational_sqrt(q):
    """Return the nonnegative rational square root of q, or None.

    A rational in lowest terms is a square iff numerator and denominator
    are both perfect squares.
    """
    if q < 0:
        return None
    num, den = int(q.numerator), int(q.denominator)
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Q(rn, rd)
    return None


def binomial_coefficient(alpha, n: int):
    """Generalized binomial coefficient C(alpha, n) for rational alpha."""
    c = QONE
    for j in range(n):
        c = c * (alpha - j) / (j + 1)
    return c
