"""Small finite fields as explicit addition and multiplication tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from ..errors import DomainError

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9)

# monic irreducible moduli over the prime subfield, low degree first (constant term first)
MODULI = {
    4: (2, (1, 1, 1)),  # x^2 + x + 1
    8: (2, (1, 1, 0, 1)),  # x^3 + x + 1
    9: (3, (2, 2, 1)),  # x^2 + 2x + 2
}


def _poly_mulmod(a: tuple[int, ...], b: tuple[int, ...], p: int, mod: tuple[int, ...]) -> tuple[int, ...]:
    e = len(mod) - 1
    prod = [0] * (2 * e - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, e - 1, -1):
        top = prod[d]
        if top:
            for i in range(e + 1):
                prod[d - e + i] = (prod[d - e + i] - top * mod[i]) % p
    return tuple(prod[:e])


@dataclass(frozen=True)
class FiniteField:
    """GF(q) on the integers 0..q-1.

    For q = p^e the integer sum(c_i p^i) stands for the residue class of
    sum(c_i x^i) modulo the fixed irreducible polynomial in MODULI.
    """

    q: int
    p: int = field(init=False)
    add: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    mul: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self):
        if self.q not in SUPPORTED_Q:
            raise DomainError(f"q={self.q}: field not in supported set {SUPPORTED_Q}")
        p, mod = MODULI.get(self.q, (self.q, (0, 1)))
        e = len(mod) - 1
        digits = [tuple((v // p**i) % p for i in range(e)) for v in range(self.q)]

        def encode(c):
            return sum(x * p**i for i, x in enumerate(c))

        add = tuple(tuple(encode(tuple((x + y) % p for x, y in zip(a, b))) for b in digits) for a in digits)
        mul = tuple(tuple(encode(_poly_mulmod(a, b, p, mod)) for b in digits) for a in digits)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "mul", mul)

    @property
    def elements(self) -> range:
        return range(self.q)

    def neg(self, a: int) -> int:
        return self.add[a].index(0)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.mul[a].index(1)

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg(b)]

    def dot(self, u, v) -> int:
        s = 0
        for a, b in zip(u, v):
            s = self.add[s][self.mul[a][b]]
        return s

    def projective_points(self, dim: int) -> list[tuple[int, ...]]:
        """Nonzero vectors of GF(q)^(dim+1) whose first nonzero coordinate is 1."""
        out = []
        for v in product(range(self.q), repeat=dim + 1):
            nz = next((x for x in v if x), None)
            if nz == 1:
                out.append(v)
        return out

    def normalize(self, v) -> tuple[int, ...]:
        nz = next(x for x in v if x)
        s = self.inv(nz)
        return tuple(self.mul[s][x] for x in v)
