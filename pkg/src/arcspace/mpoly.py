"""Sparse multivariate polynomials over exact rationals.

One representation serves three distinct roles:

* polynomials in t, y1..ym defining the input systems,
* symbolic coefficient polynomials in variables like z1_2 (equations of the
  finite-dimensional solution bundle, Brieskorn obstruction data),
* elements of truncated nilpotent test rings Q[s1..sp]/m^(M+1), where the
  context carries a total-degree cap and multiplication truncates.

Terms map exponent tuples to nonzero rationals.  Monomial order is graded
lexicographic: higher total degree first, ties broken by the exponent of
the earliest variable in the context's variable order.
"""

from __future__ import annotations

from .rationals import Q, QONE, QZERO


class PolyContext:
    """Variable names plus an optional nilpotency cap on total degree."""

    def __init__(self, names, degree_cap: int | None = None):
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.degree_cap = degree_cap
        self._index = {n: i for i, n in enumerate(self.names)}
        self.zero_poly = MPoly(self, {})
        self.one_poly = MPoly(self, {(0,) * self.nvars: QONE})

    def __eq__(self, other):
        return (
            isinstance(other, PolyContext)
            and self.names == other.names
            and self.degree_cap == other.degree_cap
        )

    def __hash__(self):
        return hash((self.names, self.degree_cap))

    def var_index(self, name: str) -> int:
        return self._index[name]

    def variable(self, name: str) -> "MPoly":
        e = [0] * self.nvars
        e[self._index[name]] = 1
        return MPoly(self, {tuple(e): QONE})

    def monomial(self, exps, coeff=QONE) -> "MPoly":
        c = Q(coeff)
        if c == 0:
            return self.zero_poly
        exps = tuple(exps)
        if self.degree_cap is not None and sum(exps) > self.degree_cap:
            return self.zero_poly
        return MPoly(self, {exps: c})

    def constant(self, coeff) -> "MPoly":
        return self.monomial((0,) * self.nvars, coeff)


def _grlex_key(exps):
    return (sum(exps), exps)


class MPoly:
    """Immutable sparse polynomial attached to a PolyContext."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: PolyContext, terms: dict):
        self.ctx = ctx
        self.terms = terms

    # -- basic predicates -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self):
        return self.terms.get((0,) * self.ctx.nvars, QZERO)

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def has_constant_term(self) -> bool:
        return (0,) * self.ctx.nvars in self.terms

    # -- ring operations --------------------------------------------------

    def _check(self, other: "MPoly"):
        if self.ctx != other.ctx:
            raise ValueError("polynomial contexts differ")

    def __add__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, QZERO) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return MPoly(self.ctx, terms)

    def __neg__(self) -> "MPoly":
        return MPoly(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        cap = self.ctx.degree_cap
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if cap is not None and sum(e) > cap:
                    continue
                s = terms.get(e, QZERO) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return MPoly(self.ctx, terms)

    def scale(self, coeff) -> "MPoly":
        c = Q(coeff)
        if c == 0:
            return self.ctx.zero_poly
        return MPoly(self.ctx, {e: k * c for e, k in self.terms.items()})

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = self.ctx.one_poly
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, MPoly)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    # -- calculus and substitution ---------------------------------------

    def diff(self, var: int | str) -> "MPoly":
        i = var if isinstance(var, int) else self.ctx.var_index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            terms[tuple(ne)] = c * e[i]
        return MPoly(self.ctx, terms)

    def eval(self, values):
        """Evaluate at a full assignment (list indexed like ctx.names).

        Values may be rationals or any objects supporting ring arithmetic
        with them.
        """
        total = None
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                for _ in range(k):
                    term = term * values[i]
            total = term if total is None else total + term
        return QZERO if total is None else total

    def subst_zero(self, var_indices) -> "MPoly":
        """Set the given variables to zero."""
        idx = set(var_indices)
        terms = {e: c for e, c in self.terms.items() if all(e[i] == 0 for i in idx)}
        return MPoly(self.ctx, terms)

    def compose(self, replacements: dict) -> "MPoly":
        """Substitute polynomials for variables (others left alone)."""
        out = self.ctx.zero_poly
        for e, c in self.terms.items():
            term = self.ctx.constant(c)
            for i, k in enumerate(e):
                if k == 0:
                    continue
                if i in replacements:
                    term = term * replacements[i] ** k
                else:
                    mono = [0] * self.ctx.nvars
                    mono[i] = k
                    term = term * MPoly(self.ctx, {tuple(mono): QONE})
            out = out + term
        return out

    # -- canonical form ----------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: _grlex_key(ec[0]), reverse=True)

    def leading_coefficient(self):
        if not self.terms:
            return QZERO
        return self.sorted_terms()[0][1]

    def monic(self) -> "MPoly":
        lc = self.leading_coefficient()
        if lc == 0:
            return self
        return self.scale(Q(1) / lc)

    def monomials(self):
        return set(self.terms.keys())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for i, k in enumerate(e):
                if k == 0:
                    continue
                name = self.ctx.names[i]
                factors.append(name if k == 1 else f"{name}^{k}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MPoly({self})"


class PolynomialRing:
    """Coefficient-ring adapter so truncated series can carry MPoly
    coefficients (symbolic z-variables, nilpotent s-variables)."""

    def __init__(self, ctx: PolyContext):
        self.ctx = ctx
        self.zero = ctx.zero_poly
        self.one = ctx.one_poly

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and self.ctx == other.ctx

    def __hash__(self):
        return hash(("PolynomialRing", self.ctx))

    def from_rational(self, q) -> MPoly:
        return self.ctx.constant(q)

    def is_zero(self, c: MPoly) -> bool:
        return c.is_zero()

    def inv(self, c: MPoly) -> MPoly:
        raise ZeroDivisionError("polynomial coefficients have no inverses")


class NilRing(PolynomialRing):
    """Truncated nilpotent test ring Q[s1..sp]/m^(M+1).

    A complete local ring with residue field Q; every element with zero
    constant term is nilpotent of index <= M+1, so geometric series in the
    maximal ideal terminate.
    """

    def __init__(self, p: int, M: int):
        if p < 1:
            raise ValueError("need at least one parameter")
        if M < 1:
            raise ValueError("nilpotency order M must be >= 1")
        super().__init__(PolyContext(tuple(f"s{i}" for i in range(1, p + 1)), degree_cap=M))
        self.p = p
        self.M = M

    def __eq__(self, other):
        return isinstance(other, NilRing) and self.p == other.p and self.M == other.M

    def __hash__(self):
        return hash(("NilRing", self.p, self.M))

    def variable(self, i: int) -> MPoly:
        return self.ctx.variable(f"s{i}")

    def reduce(self, c: MPoly):
        """Residue of c in Q (drop all terms of positive s-degree)."""
        return c.constant_term()

    def is_nilpotent(self, c: MPoly) -> bool:
        return c.constant_term() == 0

    def inv(self, c: MPoly) -> MPoly:
        """Invert a unit c = c0*(1 + n) with c0 in Q*, n nilpotent.

        (1 + n)^-1 = sum_k (-n)^k, which terminates at k = M.
        """
        c0 = c.constant_term()
        if c0 == 0:
            raise ZeroDivisionError("element of the maximal ideal is not a unit")
        n = c.scale(Q(1) / c0) - self.one
        out = self.one
        power = self.one
        for _ in range(self.M):
            power = power * (-n)
            if power.is_zero():
                break
            out = out + power
        return out.scale(Q(1) / c0)
