"""Exact real scalars: rationals, quadratic surds, and real algebraic numbers.

The tower is ``Fraction`` < ``Surd`` < ``AlgebraicReal``; every constructor and
arithmetic operation returns the lowest tier that represents the value exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, isqrt

from sympy import factorint

from .poly import IntPoly, bisect_root, isolate_real_roots, sturm_count

LT, EQ, GT = -1, 0, 1


def squarefree_split(d: int) -> tuple[int, int]:
    """Write d = s*s*r with r squarefree; return (s, r)."""
    if d < 0:
        raise ValueError("negative radicand")
    if d == 0:
        return 0, 1
    root = isqrt(d)
    if root * root == d:
        return root, 1
    s, r = 1, 1
    for p, e in factorint(d).items():
        s *= p ** (e // 2)
        if e % 2:
            r *= p
    return s, r


@dataclass(frozen=True)
class Surd:
    """a + b*sqrt(d) with d squarefree, d >= 2 and b != 0. Build via :func:`surd`."""

    a: Fraction
    b: Fraction
    d: int

    # -- helpers ------------------------------------------------------------
    def _same_field(self, other: "Surd") -> None:
        if other.d != self.d:
            raise ValueError(f"mixed radicands sqrt({self.d}) and sqrt({other.d})")

    def conjugate(self) -> "Surd":
        return Surd(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == 0 or sa == sb:
            return sb
        return sa if self.a * self.a > self.b * self.b * self.d else sb

    def minpoly(self) -> IntPoly:
        # (x - a)^2 - b^2 d
        return IntPoly.from_rational([self.a * self.a - self.b * self.b * self.d, -2 * self.a, 1])

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return surd(self.a + other, self.b, self.d)
        if isinstance(other, Surd):
            self._same_field(other)
            return surd(self.a + other.a, self.b + other.b, self.d)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Surd)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return surd(self.a * other, self.b * other, self.d)
        if isinstance(other, Surd):
            self._same_field(other)
            return surd(
                self.a * other.a + self.b * other.b * self.d,
                self.a * other.b + self.b * other.a,
                self.d,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return surd(self.a / other, self.b / other, self.d)
        if isinstance(other, Surd):
            self._same_field(other)
            return (self * other.conjugate()) / other.norm()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.conjugate() * (Fraction(other) / self.norm())
        return NotImplemented

    def __pow__(self, e: int):
        out: object = Fraction(1)
        for _ in range(e):
            out = out * self
        return out

    # -- comparison / conversion -------------------------------------------
    def __float__(self):
        return float(self.a) + float(self.b) * self.d**0.5

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return False
        if isinstance(other, Surd):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, AlgebraicReal):
            return compare(self, other) == EQ
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Surd({self})"


def surd(a, b, d: int):
    """Exact a + b*sqrt(d), demoted to a Fraction when rational."""
    a, b = Fraction(a), Fraction(b)
    if b == 0 or d == 0:
        return a
    s, r = squarefree_split(d)
    if r == 1:
        return a + b * s
    return Surd(a, b * s, r)


def sqrt(x) -> "Fraction | Surd":
    """Square root of a nonnegative rational as an exact scalar."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("square root of a negative number")
    # sqrt(p/q) = sqrt(p*q)/q
    return surd(0, Fraction(1, x.denominator), x.numerator * x.denominator)


# ---------------------------------------------------------------------------
# Algebraic reals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    """Closed rational interval [lo, hi]; used for certified evaluation."""

    lo: Fraction
    hi: Fraction

    @property
    def sign(self) -> int:
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0 if self.lo == self.hi == 0 else 2  # 2: undecided

    def __float__(self):
        return float((self.lo + self.hi) / 2)


def _interval_eval(p: IntPoly, lo: Fraction, hi: Fraction) -> Interval:
    a, b = Fraction(0), Fraction(0)
    for c in reversed(p.coeffs):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return Interval(a, b)


DISPLAY_WIDTH = Fraction(1, 10**6)


@dataclass(frozen=True)
class AlgebraicReal:
    """The unique root of the squarefree ``poly`` in the half-open interval (lo, hi]."""

    poly: IntPoly
    lo: Fraction
    hi: Fraction

    def refine(self, width=DISPLAY_WIDTH) -> "AlgebraicReal":
        lo, hi = bisect_root(self.poly, self.lo, self.hi, Fraction(width))
        if lo == hi:
            # exact rational hit; keep a nondegenerate interval for the type invariant
            return AlgebraicReal(self.poly, max(self.lo, lo - Fraction(width)), lo)
        return AlgebraicReal(self.poly, lo, hi)

    def exact_rational(self) -> Fraction | None:
        """The root if it sits on the right endpoint, else None."""
        return self.hi if self.poly.sign_at(self.hi) == 0 else None

    def __float__(self):
        r = self.refine(Fraction(1, 2**60))
        return float((r.lo + r.hi) / 2)

    def _affine(self, a, b):
        """a + b*self as an exact scalar."""
        a, b = Fraction(a), Fraction(b)
        if b == 0:
            return a
        q = self.poly.compose_linear(a, b)
        if b > 0:
            return AlgebraicReal(q, a + b * self.lo, a + b * self.hi)
        lo, hi = a + b * self.hi, a + b * self.lo
        if q.sign_at(lo) == 0:
            return lo
        return AlgebraicReal(q, lo, hi)

    def __neg__(self):
        return self._affine(0, -1)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._affine(other, 1)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._affine(-Fraction(other), 1)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._affine(other, -1)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._affine(0, other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Surd, AlgebraicReal)):
            return compare(self, other) == EQ
        return NotImplemented

    def __hash__(self):
        return hash(("alg", self.poly))

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"AlgebraicReal({self})"


Scalar = Fraction | Surd | AlgebraicReal


def as_scalar(x) -> Scalar:
    if isinstance(x, (Surd, AlgebraicReal, Fraction)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def _quadratic_roots(q: IntPoly) -> list:
    c, b, a = q.coeffs
    disc = b * b - 4 * a * c
    r = sqrt(disc)
    return [(-b - r) / (2 * a), (-b + r) / (2 * a)]


def _in_half_open(x, lo: Fraction, hi: Fraction) -> bool:
    return compare(x, lo) > 0 and compare(x, hi) <= 0


def demote(poly: IntPoly, lo: Fraction, hi: Fraction) -> Scalar:
    """Lowest-tier exact form of the unique root of squarefree ``poly`` in (lo, hi]."""
    poly = poly.primitive()
    factors = [poly] if poly.degree <= 2 else _irreducible_factors(poly)
    for f in factors:
        if f.degree < 1 or sturm_count(f, lo, hi) == 0:
            continue
        if f.degree == 1:
            return Fraction(-f.coeffs[0], f.coeffs[1])
        if f.degree == 2:
            for r in _quadratic_roots(f):
                if _in_half_open(r, lo, hi):
                    return r
            raise AssertionError("quadratic root not located")  # pragma: no cover
        return AlgebraicReal(f, lo, hi)
    raise ValueError("no root of the polynomial in the given interval")


def _irreducible_factors(p: IntPoly) -> list[IntPoly]:
    # rational linear factors are cheap to find exactly; sympy handles the rest
    import sympy

    x = sympy.Symbol("x")
    expr = sympy.Poly(list(reversed(p.coeffs)), x)
    _, fl = sympy.factor_list(expr)
    out = []
    for f, _ in fl:
        coeffs = [int(c) for c in reversed(sympy.Poly(f, x).all_coeffs())]
        out.append(IntPoly(coeffs).primitive())
    out.sort(key=lambda f: f.degree)
    return out


def factor_poly(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Irreducible factors over Z with multiplicity; primitive, positive leading coefficient.

    The content and sign are dropped, so the product equals p only up to a constant.
    """
    import sympy

    x = sympy.Symbol("x")
    _, fl = sympy.factor_list(sympy.Poly(list(reversed(p.coeffs)), x))
    out = []
    for f, m in fl:
        q = IntPoly([int(c) for c in reversed(sympy.Poly(f, x).all_coeffs())]).primitive()
        if q.lc < 0:
            q = -q
        out.append((q, m))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


def format_factorization(p: IntPoly) -> str:
    """E.g. '(x-3)(x-1)^5(x+2)^4'."""
    return "".join(f"({f})^{m}" if m > 1 else f"({f})" for f, m in factor_poly(p))


def real_roots(p: IntPoly) -> list[Scalar]:
    """Distinct real roots of p in ascending order, each in lowest exact tier."""
    q = p.squarefree_part()
    return [demote(q, lo, hi) for lo, hi in isolate_real_roots(q)]


def largest_real_root(p: IntPoly) -> Scalar:
    q = p.squarefree_part()
    ivals = isolate_real_roots(q)
    if not ivals:
        raise ValueError(f"polynomial {p} has no real root")
    lo, hi = ivals[-1]
    return demote(q, lo, hi)


def _to_algebraic(x: Scalar) -> AlgebraicReal:
    if isinstance(x, AlgebraicReal):
        return x
    if isinstance(x, Fraction):
        return AlgebraicReal(IntPoly.from_rational([-x, 1]), x - 1, x)
    # sqrt(d) in (s/4, (s+1)/4); width |b|/4 excludes the conjugate at distance 2|b|sqrt(d)
    s = isqrt(16 * x.d)
    ends = sorted((x.a + x.b * Fraction(s, 4), x.a + x.b * Fraction(s + 1, 4)))
    return AlgebraicReal(x.minpoly(), ends[0], ends[1])


def _cmp_basic(x, y) -> int:
    """Compare two values in Fraction/Surd, possibly with different radicands."""
    if isinstance(x, Surd) and isinstance(y, Surd) and x.d != y.d:
        return _cmp_algebraic(_to_algebraic(x), _to_algebraic(y))
    diff = x - y
    if isinstance(diff, Surd):
        return diff.sign()
    return (diff > 0) - (diff < 0)


def _cmp_alg_exact(a: AlgebraicReal, y) -> int:
    """Compare algebraic a with a rational or surd y."""
    lo, hi = a.lo, a.hi
    p = a.poly
    s_hi = p.sign_at(hi)
    if s_hi == 0:
        return _cmp_basic(hi, y)
    while True:
        if _cmp_basic(y, lo) <= 0:
            return GT
        if _cmp_basic(y, hi) > 0:
            return LT
        if p(y) == 0:
            return EQ
        mid = (lo + hi) / 2
        s = p.sign_at(mid)
        if s == 0:
            return _cmp_basic(mid, y)
        if s == s_hi:
            hi = mid
        else:
            lo = mid


def _cmp_algebraic(a: AlgebraicReal, b: AlgebraicReal) -> int:
    ra, rb = a.exact_rational(), b.exact_rational()
    if ra is not None:
        return -_cmp_alg_exact(b, ra)
    if rb is not None:
        return _cmp_alg_exact(a, rb)
    alo, ahi, blo, bhi = a.lo, a.hi, b.lo, b.hi
    g = a.poly.gcd(b.poly)
    checked_equal = g.degree < 1
    sa, sb = a.poly.sign_at(ahi), b.poly.sign_at(bhi)
    while True:
        if ahi <= blo:
            return LT
        if bhi <= alo:
            return GT
        if not checked_equal:
            lo, hi = max(alo, blo), min(ahi, bhi)
            if sturm_count(g, lo, hi) >= 1:
                return EQ
            checked_equal = True
        # bisect the wider interval
        if ahi - alo >= bhi - blo:
            mid = (alo + ahi) / 2
            s = a.poly.sign_at(mid)
            if s == 0:
                return _cmp_alg_exact(b, mid) * -1
            if s == sa:
                ahi = mid
            else:
                alo = mid
        else:
            mid = (blo + bhi) / 2
            s = b.poly.sign_at(mid)
            if s == 0:
                return _cmp_alg_exact(a, mid)
            if s == sb:
                bhi = mid
            else:
                blo = mid


def compare(x, y) -> int:
    """Exact trichotomy: -1, 0, 1 for x < y, x == y, x > y."""
    x, y = as_scalar(x), as_scalar(y)
    ax, ay = isinstance(x, AlgebraicReal), isinstance(y, AlgebraicReal)
    if not ax and not ay:
        return _cmp_basic(x, y)
    if ax and ay:
        return _cmp_algebraic(x, y)
    if ax:
        return _cmp_alg_exact(x, y)
    return -_cmp_alg_exact(y, x)


def evaluate(p: IntPoly, x):
    """Exact value of p at x.

    Rational and surd arguments give exact values in the same tower; an
    algebraic argument gives Fraction(0) when p vanishes there and otherwise a
    rational :class:`Interval` guaranteed not to contain zero.
    """
    x = as_scalar(x)
    if isinstance(x, Fraction):
        return p.eval_fraction(x)
    if isinstance(x, Surd):
        return p(x)
    g = p.gcd(x.poly)
    if g.degree >= 1 and sturm_count(g, x.lo, x.hi) >= 1:
        return Fraction(0)
    lo, hi = x.lo, x.hi
    width = hi - lo
    while True:
        iv = _interval_eval(p, lo, hi)
        if iv.sign in (-1, 1):
            return iv
        width /= 4
        lo, hi = bisect_root(x.poly, lo, hi, width)
        if lo == hi:
            return p.eval_fraction(lo)


def sign(x) -> int:
    x = as_scalar(x)
    return compare(x, Fraction(0))


def floor_scalar(x) -> int:
    """Exact floor of a scalar."""
    x = as_scalar(x)
    if isinstance(x, Fraction):
        return floor(x)
    f = floor(float(x))
    while compare(x, f) < 0:
        f -= 1
    while compare(x, f + 1) >= 0:
        f += 1
    return f


# ---------------------------------------------------------------------------
# Canonical text form
# ---------------------------------------------------------------------------

def _fmt_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _fmt_decimal(q: Fraction, digits: int, up: bool) -> str:
    scale = 10**digits
    v = q * scale
    n = -(-v.numerator // v.denominator) if up else v.numerator // v.denominator
    sgn = "-" if n < 0 else ""
    n = abs(n)
    return f"{sgn}{n // scale}.{n % scale:0{digits}d}"


def format_scalar(x) -> str:
    """Canonical reparseable string: 'p/q', 'a+b*sqrt(d)', or 'root(poly, [lo,hi])'."""
    x = as_scalar(x)
    if isinstance(x, Fraction):
        return _fmt_fraction(x)
    if isinstance(x, Surd):
        if x.b == 1:
            rad = f"sqrt({x.d})"
        elif x.b == -1:
            rad = f"-sqrt({x.d})"
        else:
            rad = f"{_fmt_fraction(x.b)}*sqrt({x.d})"
        if x.a == 0:
            return rad
        return f"{_fmt_fraction(x.a)}{'' if rad.startswith('-') else '+'}{rad}"
    digits = 6
    r = x.refine(DISPLAY_WIDTH / 10)
    while True:
        lo = Fraction(_fmt_decimal(r.lo, digits, up=False))
        hi = Fraction(_fmt_decimal(r.hi, digits, up=True))
        if lo < hi and sturm_count(r.poly, lo, hi) == 1 and r.poly.sign_at(lo) != 0:
            return f"root({r.poly}, [{_fmt_decimal(r.lo, digits, False)},{_fmt_decimal(r.hi, digits, True)}])"
        digits += 2
        r = r.refine(Fraction(1, 10 ** (digits + 1)))
