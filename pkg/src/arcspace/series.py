"""Truncated univariate power series with exact coefficients.

A series is a coefficient list indexed by the exponent of t, known through
an explicit precision: ``coeffs[j]`` is exact for ``0 <= j <= prec`` and
nothing is claimed beyond.  Coefficients live in a pluggable ring (exact
rationals by default, truncated nilpotent rings or symbolic coefficient
rings elsewhere); all operations are pure and values are immutable by
convention.

Precision bookkeeping is monotone and order-aware: adding series keeps the
minimum precision, multiplying a*b is exact through
``min(prec_a + ord_b, prec_b + ord_a)`` because the unknown tails enter
only multiplied by the known leading orders.  Dividing by t^d is the only
precision-losing primitive.
"""

from __future__ import annotations

from .errors import (
    DivisibilityFailure,
    NonUnitRadicand,
    NotAUnit,
    NotASquare,
    PrecisionExhausted,
)
from .rationals import Q, QONE, QZERO, is_rational, rational_sqrt


class RationalRing:
    """Coefficient-ring protocol instance for plain rationals."""

    zero = QZERO
    one = QONE

    def from_rational(self, q):
        return Q(q)

    def is_zero(self, c) -> bool:
        return c == 0

    def inv(self, c):
        return QONE / c

    def __eq__(self, other):
        return isinstance(other, RationalRing)

    def __hash__(self):
        return hash("RationalRing")


RATIONAL_RING = RationalRing()


class TruncatedSeries:
    __slots__ = ("ring", "coeffs", "prec")

    def __init__(self, coeffs, prec: int | None = None, ring=RATIONAL_RING):
        coeffs = list(coeffs)
        if prec is None:
            prec = len(coeffs) - 1
        if prec < 0:
            raise ValueError("precision must be >= 0")
        if len(coeffs) < prec + 1:
            coeffs.extend([ring.zero] * (prec + 1 - len(coeffs)))
        else:
            del coeffs[prec + 1 :]
        self.ring = ring
        self.coeffs = coeffs
        self.prec = prec

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(prec: int, ring=RATIONAL_RING) -> "TruncatedSeries":
        return TruncatedSeries([], prec, ring)

    @staticmethod
    def one(prec: int, ring=RATIONAL_RING) -> "TruncatedSeries":
        return TruncatedSeries([ring.one], prec, ring)

    @staticmethod
    def monomial(k: int, coeff, prec: int, ring=RATIONAL_RING) -> "TruncatedSeries":
        if k > prec:
            raise PrecisionExhausted(f"monomial t^{k} exceeds precision {prec}")
        if isinstance(coeff, (int, str)) or is_rational(coeff):
            coeff = ring.from_rational(Q(coeff))
        coeffs = [ring.zero] * (prec + 1)
        coeffs[k] = coeff
        return TruncatedSeries(coeffs, prec, ring)

    @staticmethod
    def from_rationals(values, prec: int) -> "TruncatedSeries":
        return TruncatedSeries([Q(v) for v in values], prec)

    # -- inspection ----------------------------------------------------------

    def order(self) -> int | None:
        """Smallest exponent with nonzero coefficient, None if the series
        vanishes to its stored precision (zero-to-precision is *not* a
        claim of exact zero)."""
        for j, c in enumerate(self.coeffs):
            if not self.ring.is_zero(c):
                return j
        return None

    def effective_order(self) -> int:
        o = self.order()
        return self.prec + 1 if o is None else o

    @property
    def zero_constant(self) -> bool:
        return self.ring.is_zero(self.coeffs[0])

    def is_zero_to_precision(self) -> bool:
        return self.order() is None

    def coefficient(self, j: int):
        if j > self.prec:
            raise PrecisionExhausted(f"coefficient {j} beyond precision {self.prec}")
        return self.coeffs[j]

    def degree_bound_ok(self, bound: int) -> bool:
        """True if all stored coefficients above `bound` vanish."""
        return all(self.ring.is_zero(c) for c in self.coeffs[bound + 1 :])

    # -- ring operations -----------------------------------------------------

    def _check(self, other: "TruncatedSeries"):
        if self.ring != other.ring:
            raise ValueError("coefficient rings differ")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        prec = min(self.prec, other.prec)
        return TruncatedSeries(
            [self.coeffs[j] + other.coeffs[j] for j in range(prec + 1)], prec, self.ring
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        prec = min(self.prec, other.prec)
        return TruncatedSeries(
            [self.coeffs[j] - other.coeffs[j] for j in range(prec + 1)], prec, self.ring
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs], self.prec, self.ring)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        prec = min(self.prec + other.effective_order(), other.prec + self.effective_order())
        is_zero = self.ring.is_zero
        out = [self.ring.zero] * (prec + 1)
        for i, a in enumerate(self.coeffs):
            if is_zero(a):
                continue
            if i > prec:
                break
            for j, b in enumerate(other.coeffs[: prec - i + 1]):
                if is_zero(b):
                    continue
                out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, prec, self.ring)

    def scale(self, coeff) -> "TruncatedSeries":
        return TruncatedSeries([c * coeff for c in self.coeffs], self.prec, self.ring)

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            raise ValueError("negative series power")
        result = TruncatedSeries.one(self.prec, self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- structural operations -------------------------------------------------

    def truncate(self, prec: int) -> "TruncatedSeries":
        if prec > self.prec:
            raise PrecisionExhausted(f"cannot extend precision {self.prec} to {prec}")
        return TruncatedSeries(self.coeffs[: prec + 1], prec, self.ring)

    def extend_polynomial(self, prec: int, degree_bound: int | None = None) -> "TruncatedSeries":
        """Zero-pad to a higher precision.

        Sound only for values known to be polynomials: every stored
        coefficient above `degree_bound` must already vanish.
        """
        bound = self.prec if degree_bound is None else degree_bound
        if not self.degree_bound_ok(bound):
            raise DivisibilityFailure(
                f"series has coefficients above degree {bound}; not a polynomial"
            )
        if prec <= self.prec:
            return self
        return TruncatedSeries(list(self.coeffs), prec, self.ring)

    def jet(self, deg: int) -> "TruncatedSeries":
        """Polynomial part of degree <= deg, at unchanged precision."""
        if deg > self.prec:
            raise PrecisionExhausted(f"jet degree {deg} beyond precision {self.prec}")
        coeffs = list(self.coeffs[: deg + 1])
        return TruncatedSeries(coeffs, self.prec, self.ring)

    def tail(self, deg: int) -> "TruncatedSeries":
        """Part of order > deg (self - jet(deg))."""
        if deg > self.prec:
            raise PrecisionExhausted(f"tail degree {deg} beyond precision {self.prec}")
        coeffs = [self.ring.zero] * (deg + 1) + list(self.coeffs[deg + 1 :])
        return TruncatedSeries(coeffs, self.prec, self.ring)

    def shift_down(self, d: int) -> "TruncatedSeries":
        """Exact division by t^d; the low d coefficients must vanish.

        This is the only precision-losing primitive: the result is known
        through prec - d.
        """
        if d == 0:
            return self
        if self.prec < d:
            raise PrecisionExhausted(f"cannot divide by t^{d} at precision {self.prec}")
        for j in range(d):
            if not self.ring.is_zero(self.coeffs[j]):
                raise DivisibilityFailure(f"coefficient of t^{j} is nonzero; not divisible by t^{d}")
        return TruncatedSeries(self.coeffs[d:], self.prec - d, self.ring)

    def shift_up(self, d: int) -> "TruncatedSeries":
        """Multiplication by t^d (knowledge genuinely extends to prec + d)."""
        return TruncatedSeries([self.ring.zero] * d + list(self.coeffs), self.prec + d, self.ring)

    # -- inversion and square root -----------------------------------------------

    def invert_unit(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a unit constant term."""
        a0 = self.coeffs[0]
        if self.ring.is_zero(a0):
            raise NotAUnit("series has zero constant term")
        inv0 = self.ring.inv(a0)
        out = [self.ring.zero] * (self.prec + 1)
        out[0] = inv0
        for n in range(1, self.prec + 1):
            acc = self.ring.zero
            for j in range(1, n + 1):
                if not self.ring.is_zero(self.coeffs[j]):
                    acc = acc + self.coeffs[j] * out[n - j]
            out[n] = -(acc * inv0)
        return TruncatedSeries(out, self.prec, self.ring)

    def sqrt(self, leading_hint) -> "TruncatedSeries":
        """Square root with the branch fixed by its constant term.

        The constant term must equal leading_hint**2 with a nonzero
        rational hint; the branch with any nonzero leading value is
        reachable, which a sign convention could not provide.
        """
        if self.ring != RATIONAL_RING:
            raise ValueError("square roots are implemented over rationals only")
        hint = Q(leading_hint)
        if hint == 0:
            raise NonUnitRadicand("square-root branch hint must be nonzero")
        s0 = self.coeffs[0]
        if s0 == 0:
            raise NonUnitRadicand("series has zero constant term")
        if s0 != hint * hint:
            if rational_sqrt(s0) is None:
                raise NotASquare(f"constant term {s0} is not a rational square")
            raise NotASquare(f"constant term {s0} differs from hint^2 = {hint * hint}")
        out = [QZERO] * (self.prec + 1)
        out[0] = hint
        double = 2 * hint
        for n in range(1, self.prec + 1):
            acc = QZERO
            for j in range(1, n):
                acc = acc + out[j] * out[n - j]
            out[n] = (self.coeffs[n] - acc) / double
        return TruncatedSeries(out, self.prec, self.ring)

    # -- comparison ----------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.ring == other.ring
            and self.prec == other.prec
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.prec, tuple(self.coeffs)))

    def agrees_with(self, other: "TruncatedSeries", through: int | None = None) -> bool:
        """Equality of all coefficients through min(prec, other.prec) or an
        explicit bound."""
        self._check(other)
        bound = min(self.prec, other.prec)
        if through is not None:
            if through > bound:
                raise PrecisionExhausted(
                    f"comparison through {through} exceeds common precision {bound}"
                )
            bound = through
        return all(self.coeffs[j] == other.coeffs[j] for j in range(bound + 1))

    def __str__(self):
        parts = []
        for j, c in enumerate(self.coeffs):
            if self.ring.is_zero(c):
                continue
            text = str(c)
            wrap = " " in text  # composite coefficients (nilpotent rings)
            negative = not wrap and text.startswith("-")
            if negative:
                text = text[1:]
            if j == 0:
                body = f"({text})" if wrap else text
            else:
                power = "t" if j == 1 else f"t^{j}"
                if text == "1":
                    body = power
                elif wrap:
                    body = f"({text})*{power}"
                else:
                    body = f"{text}*{power}"
            parts.append(("-" if negative else "+", body))
        if not parts:
            poly = "0"
        else:
            sign0, body0 = parts[0]
            poly = ("-" if sign0 == "-" else "") + body0
            for sign, body in parts[1:]:
                poly += f" {sign} {body}"
        return f"{poly} + O(t^{self.prec + 1})"

    def __repr__(self):
        return f"TruncatedSeries({self})"


# -- vectors of series (arcs) --------------------------------------------------


def validate_arc(vec) -> None:
    """Arcs centered at 0 must have zero constant term in every component."""
    for i, s in enumerate(vec):
        if not s.zero_constant:
            raise ValueError(f"component {i + 1} has nonzero constant term")


def vec_min_prec(vec) -> int:
    return min(s.prec for s in vec)


def vec_add(a, b):
    return [x + y for x, y in zip(a, b, strict=True)]


def vec_sub(a, b):
    return [x - y for x, y in zip(a, b, strict=True)]


def vec_agrees(a, b, through: int | None = None) -> bool:
    return all(x.agrees_with(y, through) for x, y in zip(a, b, strict=True))


def vec_order(vec) -> int | None:
    """Minimum component order; None when every component is zero to
    precision."""
    orders = [s.order() for s in vec]
    finite = [o for o in orders if o is not None]
    return min(finite) if finite else None
