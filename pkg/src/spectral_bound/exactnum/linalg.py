"""Division-free characteristic polynomials over any commutative ring."""

from __future__ import annotations

from typing import Sequence


def berkowitz(A: Sequence[Sequence]) -> list:
    """Coefficients of det(xI - A), lowest degree first.

    Entries may be ints, Fractions, or any ring elements supporting + and *.
    Uses only ring operations, O(n^4).
    """
    n = len(A)
    poly = [1]  # highest degree first while building
    for r in range(n):
        a = A[r][r]
        row = [A[r][j] for j in range(r)]
        col = [A[i][r] for i in range(r)]
        toeplitz = [1, -a]
        v = col
        for _ in range(r):
            toeplitz.append(-sum((x * y for x, y in zip(row, v)), 0))
            v = [sum((A[i][j] * v[j] for j in range(r)), 0) for i in range(r)]
        new = []
        for i in range(r + 2):
            s = 0
            for j in range(len(poly)):
                if 0 <= i - j < len(toeplitz):
                    s = s + toeplitz[i - j] * poly[j]
            new.append(s)
        poly = new
    return list(reversed(poly))
