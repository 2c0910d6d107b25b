"""Exact computation on spaces of univariate power-series solutions of
polynomial systems: stratification by Jacobian-minor order, linearization
and cartesian factorization of the strata, Newton lifting of approximate
solutions, and Weierstrass division of deformations over nilpotent
parameter rings."""

from .rationals import Q
from .series import RATIONAL_RING, TruncatedSeries

__all__ = ["Q", "RATIONAL_RING", "TruncatedSeries"]
