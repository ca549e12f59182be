"""Recurrence polynomials F_i^(k), their partial sums G_i, and extreme zeros."""

from __future__ import annotations

from functools import lru_cache

from .exactnum import AlgebraicReal, IntPoly, X, isolate_real_roots, largest_real_root
from .exactnum.scalars import Scalar


def _check(k: int, i: int) -> None:
    if k < 2:
        raise ValueError(f"valency k must be >= 2, got {k}")
    if i < 0:
        raise ValueError(f"index must be >= 0, got {i}")


@lru_cache(maxsize=None)
def F(k: int, i: int) -> IntPoly:
    """F_0 = 1, F_1 = x, F_2 = x^2 - k, F_i = x F_{i-1} - (k-1) F_{i-2}."""
    _check(k, i)
    if i == 0:
        return IntPoly.const(1)
    if i == 1:
        return X
    if i == 2:
        return X * X - k
    return X * F(k, i - 1) - F(k, i - 2) * (k - 1)


@lru_cache(maxsize=None)
def G(k: int, i: int) -> IntPoly:
    """Partial sum F_0 + ... + F_i; monic of degree i."""
    _check(k, i)
    if i == 0:
        return F(k, 0)
    return G(k, i - 1) + F(k, i)


@lru_cache(maxsize=None)
def top_root(p: IntPoly) -> AlgebraicReal:
    """Largest real root as an isolating interval, without minimal-polynomial work."""
    q = p.squarefree_part()
    lo, hi = isolate_real_roots(q)[-1]
    return AlgebraicReal(q, lo, hi)


def lambda_top(k: int, t: int) -> Scalar:
    """Largest zero of G_t."""
    if t < 1:
        raise ValueError("lambda_top needs t >= 1")
    return largest_real_root(G(k, t))


def mu_top(k: int, t: int) -> Scalar:
    """Largest zero of F_t."""
    if t < 1:
        raise ValueError("mu_top needs t >= 1")
    return largest_real_root(F(k, t))
