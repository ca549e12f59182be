"""Dense integer polynomials and Sturm-sequence root isolation."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

Number = int | Fraction


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Integer-coefficient polynomial, coefficients lowest degree first.

    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _strip(int(x) for x in coeffs)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def from_rational(cls, coeffs: Sequence[Number]) -> "IntPoly":
        """Clear denominators of a rational coefficient list and return the primitive part."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        return cls(int(c * den) for c in fr).primitive()

    # -- basic properties ---------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Divide by the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.const(other)
        raise TypeError(f"cannot combine IntPoly with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other).coeffs
        a = self.coeffs
        n = max(len(a), len(o))
        return IntPoly((a[i] if i < len(a) else 0) + (o[i] if i < len(o) else 0) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        o = self._coerce(other).coeffs
        a = self.coeffs
        if not a or not o:
            return IntPoly()
        out = [0] * (len(a) + len(o) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, oj in enumerate(o):
                    out[i + j] += ai * oj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = IntPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def pseudo_divmod(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly", int]:
        """Return (q, r, e) with lc(other)**e * self = q*other + r."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        lb = other.lc
        e = max(self.degree - db + 1, 0)
        q = [0] * max(self.degree - db + 1, 1)
        steps = 0
        while len(r) - 1 >= db and r:
            shift = len(r) - 1 - db
            lr = r[-1]
            r = [c * lb for c in r]
            q = [c * lb for c in q]
            q[shift] += lr
            for j, bj in enumerate(other.coeffs):
                r[shift + j] -= lr * bj
            while r and r[-1] == 0:
                r.pop()
            steps += 1
        # pad so that the multiplier is exactly lb**e
        pad = e - steps
        if pad > 0:
            f = lb**pad
            r = [c * f for c in r]
            q = [c * f for c in q]
        return IntPoly(q), IntPoly(r), e

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Quotient self/other, which must be exact over the integers."""
        q, r, e = self.pseudo_divmod(other)
        if r:
            raise ValueError("division is not exact")
        f = other.lc**e
        out = []
        for c in q.coeffs:
            if c % f:
                raise ValueError("quotient is not integral")
            out.append(c // f)
        return IntPoly(out)

    def compose_linear(self, a: Number, b: Number) -> "IntPoly":
        """Primitive integer polynomial proportional to self((x - a) / b), b != 0."""
        a, b = Fraction(a), Fraction(b)
        # Horner over rational coefficient lists
        lin = [-a / b, 1 / b]
        acc: list[Fraction] = []
        for c in reversed(self.coeffs):
            nxt = [Fraction(0)] * (len(acc) + 1)
            for i, v in enumerate(acc):
                nxt[i] += v * lin[0]
                nxt[i + 1] += v * lin[1]
            nxt[0] += c
            acc = nxt
        return IntPoly.from_rational(acc)

    # -- evaluation ---------------------------------------------------------
    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            return self.eval_fraction(Fraction(x))
        # anything closed under + and * with ints (Surd, Interval, float)
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_fraction(self, x: Fraction) -> Fraction:
        num, den = x.numerator, x.denominator
        d = self.degree
        if d < 0:
            return Fraction(0)
        # homogenised Horner: sum c_i num^i den^(d-i)
        acc = 0
        p = 1
        for c in reversed(self.coeffs):
            acc = acc * num + c * p
            p *= den
        return Fraction(acc, den**d)

    def sign_at(self, x: Number) -> int:
        """Exact sign of self(x) for rational x."""
        x = Fraction(x)
        num, den = x.numerator, x.denominator
        acc = 0
        p = 1
        for c in reversed(self.coeffs):
            acc = acc * num + c * p
            p *= den
        return (acc > 0) - (acc < 0)

    def sign_at_inf(self, direction: int) -> int:
        if not self.coeffs:
            return 0
        s = 1 if self.lc > 0 else -1
        if direction < 0 and self.degree % 2:
            s = -s
        return s

    # -- gcd and squarefree decomposition ----------------------------------
    def gcd(self, other: "IntPoly") -> "IntPoly":
        a, b = self.primitive(), other.primitive()
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        cont = gcd(self.content(), other.content())
        if a.degree < b.degree:
            a, b = b, a
        while not b.is_zero():
            _, r, _ = a.pseudo_divmod(b)
            a, b = b, r.primitive()
        return a.primitive() * cont if a.degree > 0 else IntPoly.const(cont)

    def squarefree_part(self) -> "IntPoly":
        p = self.primitive()
        if p.degree < 1:
            return p
        g = p.gcd(p.derivative()).primitive()
        if g.degree == 0:
            return p
        return p.exact_div(g).primitive()

    def squarefree_decomposition(self) -> list[tuple["IntPoly", int]]:
        """Yun's algorithm: list of (factor, multiplicity), factors squarefree and coprime.

        Multiplying factor**multiplicity over the list recovers the primitive part.
        """
        p = self.primitive()
        if p.degree < 1:
            return []
        out = []
        dp = p.derivative()
        a = p.gcd(dp).primitive()
        b = p.exact_div(a).primitive()
        c = dp.exact_div(a) if a.degree > 0 else dp
        d = c - b.derivative()
        i = 1
        while b.degree > 0:
            g = b.gcd(d).primitive()
            if g.degree > 0:
                out.append((g, i))
            b_next = b.exact_div(g).primitive()
            c = d.exact_div(g) if g.degree > 0 else d
            b = b_next
            d = c - b.derivative()
            i += 1
        return out

    def cauchy_bound(self) -> int:
        """Integer B with every real root strictly inside (-B, B)."""
        if self.degree < 1:
            return 1
        lc = abs(self.lc)
        m = max(abs(c) for c in self.coeffs[:-1])
        return 2 + -(-m // lc)

    # -- display ------------------------------------------------------------
    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if a == 1 else f"{a}{mono}"
            terms.append((sign, body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += sign + body
        return s

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"


X = IntPoly.x()


# ---------------------------------------------------------------------------
# Sturm sequences
# ---------------------------------------------------------------------------

@lru_cache(maxsize=4096)
def sturm_sequence(p: IntPoly) -> tuple[IntPoly, ...]:
    """Sturm chain of the squarefree part of p, with primitive-part reduction."""
    s0 = p.squarefree_part()
    seq = [s0]
    if s0.degree < 1:
        return tuple(seq)
    seq.append(s0.derivative().primitive())
    while seq[-1].degree > 0:
        a, b = seq[-2], seq[-1]
        _, r, e = a.pseudo_divmod(b)
        if r.is_zero():
            break
        # prem = lc(b)^e * rem; recover the sign of the true remainder
        flip = -1 if (b.lc < 0 and e % 2) else 1
        seq.append(r.primitive() * (-flip * (1 if r.lc > 0 else -1)))
    return tuple(seq)


def _variations(signs: Iterable[int]) -> int:
    v = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            v += 1
        last = s
    return v


def _sign_of(q: IntPoly, x) -> int:
    if x is None:
        raise ValueError("endpoint must not be None")
    if isinstance(x, (int, Fraction)):
        return q.sign_at(x)
    v = q(x)
    return (v > 0) - (v < 0)


def sign_variations(p: IntPoly, x) -> int:
    """Sign variations of the Sturm chain of p at x (rational, Surd, or +-inf as float)."""
    seq = sturm_sequence(p)
    if isinstance(x, float) and x in (float("inf"), float("-inf")):
        d = 1 if x > 0 else -1
        return _variations(q.sign_at_inf(d) for q in seq)
    return _variations(_sign_of(q, x) for q in seq)


def sturm_count(p: IntPoly, lo, hi) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi].

    Endpoints may be rationals, Surds, or +-inf floats.
    """
    if p.is_zero():
        raise ValueError("undefined root count: zero polynomial")
    if p.degree < 1:
        return 0
    return sign_variations(p, lo) - sign_variations(p, hi)


def isolate_real_roots(p: IntPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (lo, hi], ascending, each holding exactly one distinct real root."""
    if p.is_zero():
        raise ValueError("undefined root count: zero polynomial")
    q = p.squarefree_part()
    if q.degree < 1:
        return []
    B = Fraction(q.cauchy_bound())
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-B, B, sturm_count(q, -B, B))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left = sturm_count(q, lo, mid)
        stack.append((lo, mid, left))
        stack.append((mid, hi, n - left))
    out.sort()
    return out


def bisect_root(p: IntPoly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval (lo, hi] of a simple root of p until hi - lo <= width.

    A rational root hit exactly is returned as the degenerate interval (r, r).
    """
    s_hi = p.sign_at(hi)
    if s_hi == 0:
        return hi, hi
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = p.sign_at(mid)
        if s == 0:
            return mid, mid
        if s == s_hi:
            hi = mid
        else:
            lo = mid
    return lo, hi
