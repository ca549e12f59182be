"""The tridiagonal quotient T(k,t,c), the bound M(k,t,c), and bound synthesis.

For a target second eigenvalue lambda, ``bound_for_lambda`` picks the unique
``t`` with lambda^(t-2) < lambda <= lambda^(t-1), solves for ``c >= 1`` so that
lambda is the second eigenvalue of T(k,t,c), and reports M(k,t,c) together
with its integer consequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import DomainError
from .exactnum import (
    AlgebraicReal,
    IntPoly,
    Surd,
    compare,
    evaluate,
    floor_scalar,
    format_scalar,
    isolate_real_roots,
    largest_real_root,
    sqrt,
)
from .exactnum.scalars import Scalar, as_scalar, demote
from .orthopoly import F, G, top_root


def _rational_poly(terms: Sequence[tuple[object, IntPoly]]) -> list[Fraction]:
    n = max(p.degree for _, p in terms) + 1
    out = [Fraction(0)] * n
    for coef, p in terms:
        for i, c in enumerate(p.coeffs):
            out[i] += coef * c
    return out


def _clear_positive(coeffs: Sequence[Fraction]) -> IntPoly:
    """Integer polynomial equal to a positive multiple of the rational one."""
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    p = IntPoly(int(c * den) for c in coeffs)
    g = p.content()
    return IntPoly(c // g for c in p.coeffs) if g else p


@dataclass(frozen=True)
class TridiagParams:
    k: int
    t: int
    c: Scalar

    def __post_init__(self):
        object.__setattr__(self, "c", as_scalar(self.c))
        if self.k < 2:
            raise DomainError(f"k must be >= 2, got {self.k}")
        if self.t < 2:
            raise DomainError(f"t must be >= 2, got {self.t}")
        if compare(self.c, 0) <= 0:
            raise DomainError(f"c must be positive, got {format_scalar(self.c)}")


def tridiag_matrix(p: TridiagParams) -> list[list[Scalar]]:
    """t x t matrix, subdiagonal (1,...,1,c), superdiagonal (k,k-1,...,k-1), row sums k."""
    k, t, c = p.k, p.t, p.c
    T = [[Fraction(0)] * t for _ in range(t)]
    for i in range(t):
        lower = (c if i == t - 1 else Fraction(1)) if i > 0 else Fraction(0)
        upper = (Fraction(k) if i == 0 else Fraction(k - 1)) if i < t - 1 else Fraction(0)
        if i > 0:
            T[i][i - 1] = lower
        if i < t - 1:
            T[i][i + 1] = upper
        T[i][i] = k - lower - upper
    return T


def second_eig_poly(p: TridiagParams) -> IntPoly:
    """Integer-cleared (c-1) G_{t-2} + G_{t-1}; its zeros are the eigenvalues of T other than k."""
    if isinstance(p.c, Surd):
        raise TypeError("second_eig_poly needs a rational c")
    return _clear_positive(_rational_poly([(p.c - 1, G(p.k, p.t - 2)), (1, G(p.k, p.t - 1))]))


def tridiag_second_eig(p: TridiagParams) -> Scalar:
    """Second largest eigenvalue of T(k,t,c): the largest zero of (c-1)G_{t-2} + G_{t-1}."""
    if not isinstance(p.c, Surd):
        return largest_real_root(second_eig_poly(p))
    # c = a + b sqrt(d): P_c = U + sqrt(d) V; roots of P_c are the roots of the norm
    # U^2 - d V^2 at which U and V have opposite signs
    c = p.c
    Gm2, Gm1 = G(p.k, p.t - 2), G(p.k, p.t - 1)
    Ur = _rational_poly([(c.a - 1, Gm2), (1, Gm1)])
    Vr = _rational_poly([(c.b, Gm2)])
    U, V = _scale_keep_sign(Ur), _scale_keep_sign(Vr)
    q = _norm_poly(Ur, Vr, c.d).squarefree_part()
    for lo, hi in reversed(isolate_real_roots(q)):
        rho = AlgebraicReal(q, lo, hi)
        if _sign_at(U, rho) == -_sign_at(V, rho):
            return demote(q, lo, hi)
    raise AssertionError("no root of P_c found")  # pragma: no cover


def _scale_keep_sign(coeffs: Sequence[Fraction]) -> IntPoly:
    """Positive integer multiple of a rational polynomial."""
    p = _clear_positive(coeffs)
    lead = next(c for c in reversed(coeffs) if c)
    return -p if (p.lc > 0) != (lead > 0) else p


def _sign_at(p: IntPoly, x: AlgebraicReal) -> int:
    v = evaluate(p, x)
    return 0 if v == 0 else v.sign


def _norm_poly(Ur: Sequence[Fraction], Vr: Sequence[Fraction], d: int) -> IntPoly:
    def mul(a, b):
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    uu, vv = mul(Ur, Ur), mul(Vr, Vr)
    n = max(len(uu), len(vv))
    uu += [Fraction(0)] * (n - len(uu))
    vv += [Fraction(0)] * (n - len(vv))
    return _clear_positive([a - d * b for a, b in zip(uu, vv)])


def M(p: TridiagParams) -> Scalar:
    """M(k,t,c) = 1 + sum_{i=0}^{t-3} k(k-1)^i + k(k-1)^{t-2}/c."""
    k, t = p.k, p.t
    head = 1 + sum(k * (k - 1) ** i for i in range(t - 2))
    return Fraction(k * (k - 1) ** (t - 2)) / p.c + head


def _lambda_top_raw(k: int, t: int):
    """Largest zero of G_t, or None for t = 0 (G_0 has no zeros)."""
    return None if t == 0 else top_root(G(k, t))


def _mu_top_raw(k: int, t: int):
    return top_root(F(k, t))


def c_for_lambda(k: int, t: int, lam) -> Scalar:
    """The c > 0 with lambda the second eigenvalue of T(k,t,c): c = -F_{t-1}(lambda)/G_{t-2}(lambda)."""
    lam = as_scalar(lam)
    if isinstance(lam, AlgebraicReal):
        raise DomainError("c_for_lambda supports rational and quadratic lambda only")
    lower = _lambda_top_raw(k, t - 2)
    upper = _mu_top_raw(k, t - 1)
    if (lower is not None and compare(lam, lower) <= 0) or compare(lam, upper) >= 0:
        raise DomainError(f"no positive c: lambda={format_scalar(lam)} outside the window for (k,t)=({k},{t})")
    c = -evaluate(F(k, t - 1), lam) / evaluate(G(k, t - 2), lam)
    if isinstance(c, Surd) and c.sign() <= 0 or not isinstance(c, Surd) and c <= 0:
        raise DomainError("no positive c")  # pragma: no cover
    return c


def select_t(k: int, lam) -> int:
    """Smallest t >= 2 with lambda <= lambda^(t-1); then lambda^(t-2) < lambda as well."""
    t = 2
    while compare(lam, _lambda_top_raw(k, t - 1)) > 0:
        t += 1
    return t


@dataclass(frozen=True)
class BoundCertificate:
    params: TridiagParams
    lambda2: Scalar
    M: Scalar
    v_ub: int
    parity_applied: bool

    def to_dict(self) -> dict:
        return {
            "k": self.params.k,
            "t": self.params.t,
            "c": format_scalar(self.params.c),
            "lambda2": format_scalar(self.lambda2),
            "M": format_scalar(self.M),
            "M_approx": float(self.M),
            "v_ub": self.v_ub,
            "parity_applied": self.parity_applied,
        }


def check_lambda_range(k: int, lam) -> None:
    if compare(lam, -1) < 0:
        raise DomainError(f"lambda={format_scalar(lam)} < -1: no connected graph with an edge qualifies")
    if compare(lam, 2 * sqrt(k - 1)) >= 0:
        raise DomainError(f"no finite bound (Ramanujan regime): lambda >= 2*sqrt({k - 1})")


def bound_for_lambda(k: int, lam) -> BoundCertificate:
    """Certificate for v(k, lambda) <= floor(M(k,t,c)), adjusted to even when k is odd."""
    lam = as_scalar(lam)
    if k < 2:
        raise DomainError("k must be >= 2")
    check_lambda_range(k, lam)
    t = select_t(k, lam)
    c = c_for_lambda(k, t, lam)
    params = TridiagParams(k, t, c)
    m = M(params)
    v = floor_scalar(m)
    parity = False
    if k % 2 == 1 and v % 2 == 1:
        v -= 1
        parity = True
    return BoundCertificate(params, lam, m, v, parity)


# ---------------------------------------------------------------------------
# LP certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LPPolynomial:
    """f = sum_i f_i F_i^(k), stored by its coefficients in the F basis."""

    k: int
    f_coeffs: tuple[Fraction, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "f_coeffs", tuple(Fraction(c) for c in self.f_coeffs))

    def monomial_coeffs(self) -> list[Fraction]:
        return _rational_poly([(c, F(self.k, i)) for i, c in enumerate(self.f_coeffs)])

    @classmethod
    def from_monomial(cls, k: int, coeffs: Sequence) -> "LPPolynomial":
        """Expand a polynomial given by monomial coefficients (lowest first) in the F basis."""
        rem = [Fraction(c) for c in coeffs]
        while rem and rem[-1] == 0:
            rem.pop()
        out = [Fraction(0)] * max(len(rem), 1)
        while rem:
            d = len(rem) - 1
            lead = rem[-1]
            out[d] = lead
            for i, c in enumerate(F(k, d).coeffs):
                rem[i] -= lead * c
            while rem and rem[-1] == 0:
                rem.pop()
        return cls(k, tuple(out))


def _poly_from_roots(roots_with_mult: Sequence[tuple[Fraction, int]]) -> list[Fraction]:
    out = [Fraction(1)]
    for r, m in roots_with_mult:
        for _ in range(m):
            nxt = [Fraction(0)] * (len(out) + 1)
            for i, c in enumerate(out):
                nxt[i] -= r * c
                nxt[i + 1] += c
            out = nxt
    return out


def tridiag_lp_polynomial(k: int, eigenvalues: Sequence) -> LPPolynomial:
    """(x - l_2) prod_{i>=3} (x - l_i)^2 for rational eigenvalues l_2 > l_3 > ... of T."""
    ev = [Fraction(e) for e in eigenvalues]
    coeffs = _poly_from_roots([(ev[0], 1)] + [(e, 2) for e in ev[1:]])
    return LPPolynomial.from_monomial(k, coeffs)


def _sign_pattern_nonpositive(p: IntPoly, lo, hi) -> bool:
    """True iff p <= 0 on [lo, hi] (p nonzero, exact)."""
    factors = p.squarefree_decomposition()
    roots: list[tuple[AlgebraicReal, int]] = []
    for fac, mult in factors:
        for a, b in isolate_real_roots(fac):
            roots.append((AlgebraicReal(fac, a, b), mult))
    from functools import cmp_to_key

    roots.sort(key=cmp_to_key(lambda u, v: compare(u[0], v[0])))
    sgn = 1 if p.lc > 0 else -1
    # walk gaps from +inf leftwards
    gaps = []
    for idx in range(len(roots), -1, -1):
        left = roots[idx - 1][0] if idx > 0 else None
        right = roots[idx][0] if idx < len(roots) else None
        gaps.append((left, right, sgn))
        if idx > 0 and roots[idx - 1][1] % 2 == 1:
            sgn = -sgn
    for left, right, s in gaps:
        meets = (left is None or compare(left, hi) < 0) and (right is None or compare(right, lo) > 0)
        if meets and s > 0:
            return False
    return True


def lp_certificate_check(f: LPPolynomial, k: int, lam) -> Fraction:
    """Validate an LP certificate and return the bound f(k)/f_0.

    Requires f_0 > 0, f_i >= 0 (i >= 1), f(k) > 0 and f <= 0 on [-k, lambda].
    """
    lam = as_scalar(lam)
    fc = f.f_coeffs
    if f.k != k:
        raise DomainError(f"certificate is expanded for k={f.k}, not k={k}")
    if not fc or fc[0] <= 0:
        raise DomainError("f_0 must be positive")
    for i, c in enumerate(fc[1:], start=1):
        if c < 0:
            raise DomainError(f"f_{i} = {c} is negative")
    mono = f.monomial_coeffs()
    fk = sum(c * k**i for i, c in enumerate(mono))
    if fk <= 0:
        raise DomainError(f"f(k) = {fk} is not positive")
    p = _clear_positive(mono)
    if not _sign_pattern_nonpositive(p, Fraction(-k), lam):
        raise DomainError(f"f is positive somewhere on [-{k}, {format_scalar(lam)}]")
    return fk / fc[0]


# ---------------------------------------------------------------------------
# Moore-type bounds and finiteness
# ---------------------------------------------------------------------------

def moore_lower(k: int, g: int) -> int:
    """Lower bound n_l(k,g) on the order of a k-regular graph of girth g."""
    if k < 3 or g < 3:
        raise DomainError("moore_lower needs k >= 3 and g >= 3")
    if g % 2:
        return (k * (k - 1) ** ((g - 1) // 2) - 2) // (k - 2)
    return (2 * (k - 1) ** (g // 2) - 2) // (k - 2)


def alon_boppana_min_t(k: int, lam) -> tuple[int, int]:
    """Smallest t' with second eigenvalue of T(k,t',1) > lambda, and 1 + sum_{i<=t'-2} k(k-1)^i."""
    lam = as_scalar(lam)
    if compare(lam, 2 * sqrt(k - 1)) >= 0:
        raise DomainError(f"no finite bound (Ramanujan regime): lambda >= 2*sqrt({k - 1})")
    t = 2
    while compare(_lambda_top_raw(k, t - 1), lam) <= 0:
        t += 1
    return t, 1 + sum(k * (k - 1) ** i for i in range(t - 1))


# ---------------------------------------------------------------------------
# Extended optimality ranges
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtendedRange:
    base: TridiagParams
    threshold_c: Fraction
    f: IntPoly
    lambda_prime: Scalar
    parity: bool

    def to_dict(self) -> dict:
        return {
            "k": self.base.k,
            "t": self.base.t,
            "c": format_scalar(self.base.c),
            "parity": self.parity,
            "threshold_c": format_scalar(self.threshold_c),
            "f": str(self.f),
            "lambda_prime": format_scalar(self.lambda_prime),
            "lambda_prime_approx": float(self.lambda_prime),
        }


def extended_range(p: TridiagParams, M_parity_even: bool = False, k_odd: bool = False) -> ExtendedRange:
    """Threshold c* and polynomial f whose largest zero bounds the range where v(k, .) stays M.

    The sharper parity threshold is used when both flags are set; a flag may be
    left unset to request the plain threshold, but a set flag must be true.
    The caller asserts that some graph attains M(p).
    """
    k, t, c = p.k, p.t, p.c
    if isinstance(c, Surd) or c < 1:
        raise DomainError("extended_range needs rational c >= 1")
    m = M(p)
    if M_parity_even and (m.denominator != 1 or m.numerator % 2):
        raise DomainError(f"M = {m} is not an even integer")
    if k_odd and k % 2 == 0:
        raise DomainError(f"k = {k} is not odd")
    parity = M_parity_even and k_odd
    if c == 1:
        base = Fraction(k * (k - 1) ** (t - 1))
        cstar = base / 2 if parity else base
        terms = [(cstar - 1, G(k, t - 1)), (1, G(k, t))]
    else:
        K = k * (k - 1) ** (t - 2)
        cstar = c - 2 * c * c / (K + 2 * c) if parity else c - c * c / (K + c)
        terms = [(cstar - 1, G(k, t - 2)), (1, G(k, t - 1))]
    if cstar <= 0:
        raise DomainError("threshold c* is not positive")  # pragma: no cover
    f = _clear_positive(_rational_poly(terms)).primitive()
    return ExtendedRange(p, cstar, f, largest_real_root(f), parity)
