"""Polynomial systems f(t, y1..ym) and their Jacobian data.

Inputs are exact polynomial vectors; substitution of a series vector for y
is the evaluation map y(t) -> f(t, y(t)) and is implemented with cached
powers of the components so it stays cheap inside iterations.
"""

from __future__ import annotations

from .errors import ArityMismatch, BadSelection
from .mpoly import MPoly, PolyContext
from .rationals import Q, QONE
from .series import RATIONAL_RING, TruncatedSeries


def system_context(m: int) -> PolyContext:
    """Variables t, y1..ym (t first; canonical order t < y1 < ... < ym)."""
    return PolyContext(("t",) + tuple(f"y{i}" for i in range(1, m + 1)))


class PolySystem:
    """A vector f of k polynomials in t, y1..ym.

    k <= m is required by the linearization entry points, which check it;
    the plain algebraic operations here do not care.
    """

    def __init__(self, polys, m: int):
        self.m = m
        self.k = len(polys)
        self.ctx = system_context(m)
        for p in polys:
            if p.ctx != self.ctx:
                raise ArityMismatch(f"polynomial arity does not match m={m}")
        self.f = tuple(polys)
        self._jacobian = None

    def jacobian(self):
        """The k x m matrix of partials with respect to y (exact polynomials)."""
        if self._jacobian is None:
            self._jacobian = tuple(
                tuple(fi.diff(f"y{j}") for j in range(1, self.m + 1)) for fi in self.f
            )
        return self._jacobian

    def __repr__(self):
        eqs = "; ".join(str(p) for p in self.f)
        return f"PolySystem(m={self.m}, k={self.k}: {eqs})"


class MinorSelection:
    """A k-subset of y-columns defining a k x k minor of the Jacobian.

    Row selection is always all k rows.  The canonical permutation lists
    the selected columns first (sorted), then the rest, so block
    operations can assume the minor occupies the leading block.
    """

    def __init__(self, cols, m: int, k: int):
        cols = tuple(sorted(set(cols)))
        if len(cols) != k:
            raise BadSelection(f"need exactly {k} distinct columns, got {cols}")
        if not all(1 <= c <= m for c in cols):
            raise BadSelection(f"columns out of range 1..{m}: {cols}")
        self.cols = cols
        self.m = m
        self.k = k
        rest = tuple(i for i in range(1, m + 1) if i not in set(cols))
        # permutation[p] = original 1-based column at permuted position p
        self.permutation = cols + rest

    def permute_vec(self, vec):
        """Reorder a length-m vector into permuted (minor-first) order."""
        return [vec[c - 1] for c in self.permutation]

    def unpermute_vec(self, vec):
        out = [None] * self.m
        for pos, c in enumerate(self.permutation):
            out[c - 1] = vec[pos]
        return out

    def __repr__(self):
        return f"MinorSelection(cols={self.cols})"


def substitute(p: MPoly, y, prec: int | None = None) -> TruncatedSeries:
    """Evaluate p(t, y1(t), .., ym(t)) exactly through the guaranteed
    precision of the inputs.

    The coefficient ring is taken from the series vector, so the same code
    evaluates over rationals and over nilpotent test rings.
    """
    m = len(p.ctx.names) - 1
    if len(y) != m:
        raise ArityMismatch(f"expected {m} series components, got {len(y)}")
    ring = y[0].ring if y else RATIONAL_RING
    if prec is None:
        prec = min(s.prec for s in y)
    one = TruncatedSeries.one(prec, ring)
    power_cache: list[dict[int, TruncatedSeries]] = [dict() for _ in range(m)]

    def ypow(i: int, e: int) -> TruncatedSeries:
        cache = power_cache[i]
        if e in cache:
            return cache[e]
        if e == 1:
            r = y[i]
        else:
            half = ypow(i, e // 2)
            r = half * half
            if e & 1:
                r = r * y[i]
        cache[e] = r
        return r

    total = None
    for exps, c in p.terms.items():
        et, ey = exps[0], exps[1:]
        term = None
        for i, e in enumerate(ey):
            if e == 0:
                continue
            factor = ypow(i, e)
            term = factor if term is None else term * factor
        if term is None:
            term = one
        term = term.scale(ring.from_rational(c))
        if et:
            term = term.shift_up(et)
        total = term if total is None else total + term
    if total is None:
        total = TruncatedSeries.zero(prec, ring)
    return total


def substitute_vector(sys: PolySystem, y, prec: int | None = None):
    return [substitute(fi, y, prec) for fi in sys.f]


def _det(matrix, ctx: PolyContext) -> MPoly:
    n = len(matrix)
    if n == 0:
        return ctx.one_poly
    if n == 1:
        return matrix[0][0]
    total = ctx.zero_poly
    sign = QONE
    for j in range(n):
        sub = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        total = total + (matrix[0][j] * _det(sub, ctx)).scale(sign)
        sign = -sign
    return total


def minor_block(sys: PolySystem, sel: MinorSelection):
    """The k x k Jacobian submatrix on the selected columns."""
    jac = sys.jacobian()
    return [[jac[i][c - 1] for c in sel.cols] for i in range(sys.k)]


def minor_det(sys: PolySystem, sel: MinorSelection) -> MPoly:
    if sel.k != sys.k or sel.m != sys.m:
        raise BadSelection("selection shape does not match the system")
    return _det(minor_block(sys, sel), sys.ctx)


def adjugate_block(sys: PolySystem, sel: MinorSelection):
    """Adjugate M* of the selected block, with M* . M = det . identity.

    The defining identity is rechecked exactly on every construction;
    cofactor expansion is cheap at the block sizes that occur here.
    """
    if sel.k != sys.k or sel.m != sys.m:
        raise BadSelection("selection shape does not match the system")
    block = minor_block(sys, sel)
    k = sys.k
    ctx = sys.ctx
    adj = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            sub = [
                [block[r][c] for c in range(k) if c != i]
                for r in range(k)
                if r != j
            ]
            adj[i][j] = _det(sub, ctx).scale(Q(-1) ** (i + j))
    det = minor_det(sys, sel)
    for i in range(k):
        for j in range(k):
            acc = ctx.zero_poly
            for l in range(k):
                acc = acc + adj[i][l] * block[l][j]
            expected = det if i == j else ctx.zero_poly
            if acc != expected:
                raise AssertionError("adjugate identity M*.M = det.I failed")
    return adj


def poly_matvec(matrix, vec):
    """Multiply a matrix of evaluated series by a series vector."""
    out = []
    for row in matrix:
        acc = None
        for a, b in zip(row, vec, strict=True):
            term = a * b
            acc = term if acc is None else acc + term
        out.append(acc)
    return out
