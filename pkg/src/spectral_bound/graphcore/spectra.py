"""Exact adjacency spectra from integer characteristic polynomials.

The characteristic polynomial is computed with the division-free Berkowitz
recurrence modulo several word-size primes at once and lifted by the Chinese
remainder theorem; the coefficient bound makes the lift exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, cmp_to_key, lru_cache
from math import comb, log2
from typing import Sequence

import numpy as np
from sympy import prevprime

from ..exactnum import AlgebraicReal, IntPoly, compare, demote, isolate_real_roots, sturm_count
from ..exactnum.scalars import Scalar, as_scalar
from .graph import Graph

CHARPOLY_CAP = 256
_PRIME_BITS = 26
BOUNDARY_BAND = 1e-6


@lru_cache(maxsize=1)
def _prime_pool() -> tuple[int, ...]:
    out, p = [], 1 << _PRIME_BITS
    for _ in range(160):
        p = prevprime(p)
        out.append(p)
    return tuple(out)


def _berkowitz_mod(A: np.ndarray, primes: np.ndarray) -> np.ndarray:
    """Rows of det(xI - A) mod each prime, highest degree first; A has small entries."""
    n = A.shape[0]
    P = primes[:, None]
    poly = np.ones((len(primes), 1), dtype=np.int64)
    for r in range(n):
        sub = A[:r, :r]
        row = A[r, :r]
        v = np.broadcast_to(A[:r, r], (len(primes), r)).copy()
        toe = np.zeros((len(primes), r + 2), dtype=np.int64)
        toe[:, 0] = 1
        toe[:, 1] = (-A[r, r]) % P[:, 0]
        for i in range(r):
            toe[:, i + 2] = (-(v @ row)) % P[:, 0]
            v = (v @ sub.T) % P
        new = np.zeros((len(primes), r + 2), dtype=np.int64)
        for s in range(r + 2):
            L = min(poly.shape[1], r + 2 - s)
            new[:, s:s + L] = (new[:, s:s + L] + toe[:, s:s + 1] * poly[:, :L]) % P
        poly = new
    return poly


def _coeff_bits(n: int, maxdeg: int) -> int:
    """Bits bounding |c_i| <= C(n,i) * maxdeg^i, since all eigenvalues lie in [-maxdeg, maxdeg]."""
    best = max(log2(comb(n, i)) + i * log2(max(maxdeg, 1)) for i in range(n + 1))
    return int(best) + 2


def char_poly(g: Graph) -> IntPoly:
    """det(xI - A) with exact integer coefficients."""
    if g.n > CHARPOLY_CAP:
        raise ValueError(f"char_poly is capped at n={CHARPOLY_CAP} vertices, got {g.n}")
    return _char_poly_cached(g.n, g.adj)


@lru_cache(maxsize=512)
def _char_poly_cached(n: int, adj: tuple[int, ...]) -> IntPoly:
    g = Graph(n, adj)
    A = np.array(g.adjacency_matrix(), dtype=np.int64)
    need = _coeff_bits(n, max(g.degrees())) + 1
    count = need // (_PRIME_BITS - 1) + 1
    primes = np.array(_prime_pool()[:count], dtype=np.int64)
    rows = _berkowitz_mod(A, primes)
    modulus = 1
    for p in primes.tolist():
        modulus *= p
    basis = []
    for p in primes.tolist():
        m = modulus // p
        basis.append(m * pow(m, -1, p))
    coeffs = []
    for col in rows.T.tolist():
        x = sum(b * c for b, c in zip(basis, col)) % modulus
        if x > modulus // 2:
            x -= modulus
        coeffs.append(x)
    return IntPoly(reversed(coeffs))


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with multiplicities, largest first."""

    charpoly: IntPoly

    @cached_property
    def roots(self) -> list[tuple[Scalar, int]]:
        found = []
        for fac, mult in _sqf(self.charpoly):
            for lo, hi in isolate_real_roots(fac):
                found.append((demote(fac, lo, hi), mult))
        found.sort(key=cmp_to_key(lambda a, b: compare(b[0], a[0])))
        return found

    def eigenvalues(self) -> list[Scalar]:
        return [r for r, m in self.roots for _ in range(m)]

    def __str__(self):
        from ..exactnum import format_scalar

        return ", ".join(f"{format_scalar(r)}^{m}" if m > 1 else format_scalar(r) for r, m in self.roots)


@lru_cache(maxsize=512)
def _sqf(p: IntPoly) -> tuple[tuple[IntPoly, int], ...]:
    return tuple(p.squarefree_decomposition())


def spectrum(g: Graph) -> Spectrum:
    return Spectrum(char_poly(g))


def is_connected(g: Graph) -> bool:
    seen, frontier = 1, 1
    while frontier:
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _top_distinct(p: IntPoly, howmany: int) -> list[tuple[AlgebraicReal, int]]:
    items = []
    for fac, mult in _sqf(p):
        for lo, hi in isolate_real_roots(fac):
            items.append((AlgebraicReal(fac, lo, hi), mult))
    items.sort(key=cmp_to_key(lambda a, b: compare(b[0], a[0])))
    return items[:howmany]


def spectral_radius(g: Graph) -> Scalar:
    """Largest adjacency eigenvalue."""
    a, _ = _top_distinct(char_poly(g), 1)[0]
    return demote(a.poly, a.lo, a.hi)


def second_eig(g: Graph) -> Scalar:
    """Second largest eigenvalue counted with multiplicity, for connected graphs."""
    if not is_connected(g):
        raise ValueError("second_eig is undefined for disconnected graphs; define on components")
    if g.n < 2:
        raise ValueError("second_eig needs at least two vertices")
    top = _top_distinct(char_poly(g), 2)
    a = top[1][0] if top[0][1] == 1 else top[0][0]
    return demote(a.poly, a.lo, a.hi)


def min_eig(g: Graph) -> Scalar:
    p = char_poly(g)
    return demote(*_bottom(p))


def _bottom(p: IntPoly):
    best = None
    for fac, _ in _sqf(p):
        lo, hi = isolate_real_roots(fac)[0]
        a = AlgebraicReal(fac, lo, hi)
        if best is None or compare(a, best) < 0:
            best = a
    return best.poly, best.lo, best.hi


def count_eigs_greater(g: Graph, theta) -> int:
    """Number of eigenvalues strictly greater than theta, with multiplicity."""
    theta = as_scalar(theta)
    total = 0
    for fac, mult in _sqf(char_poly(g)):
        if isinstance(theta, AlgebraicReal):
            total += mult * sum(1 for lo, hi in isolate_real_roots(fac) if compare(AlgebraicReal(fac, lo, hi), theta) > 0)
        else:
            total += mult * sturm_count(fac, theta, float("inf"))
    return total


def eigvals_float(g: Graph) -> np.ndarray:
    """Untrusted double-precision eigenvalues, descending."""
    return np.linalg.eigvalsh(np.array(g.adjacency_matrix(), dtype=float))[::-1]


def second_eig_at_most(g: Graph, lam) -> bool:
    """Decide lambda_2(g) <= lam; numeric fast path, exact near the boundary."""
    lam = as_scalar(lam)
    if g.n < 2:
        return True
    ev = eigvals_float(g)
    gap = ev[1] - float(lam)
    if abs(gap) > BOUNDARY_BAND:
        return gap < 0
    return count_eigs_greater(g, lam) <= 1


def char_poly_cofactor(matrix: Sequence[Sequence[int]]) -> IntPoly:
    """det(xI - A) by Laplace expansion over polynomial entries; a slow oracle for small n."""
    n = len(matrix)
    from ..exactnum.poly import X

    M = [[(X if i == j else IntPoly()) - matrix[i][j] for j in range(n)] for i in range(n)]

    def det(rows: tuple[int, ...], cols: tuple[int, ...]) -> IntPoly:
        if not rows:
            return IntPoly.const(1)
        r = rows[0]
        out = IntPoly()
        for idx, c in enumerate(cols):
            if M[r][c].is_zero():
                continue
            term = M[r][c] * det(rows[1:], cols[:idx] + cols[idx + 1:])
            out = out + term if idx % 2 == 0 else out - term
        return out

    return det(tuple(range(n)), tuple(range(n)))
