from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import poly
from spectral_bound.errors import DomainError
from spectral_bound.exactnum import (
    EQ,
    GT,
    LT,
    AlgebraicReal,
    IntPoly,
    Surd,
    compare,
    evaluate,
    factor_poly,
    format_factorization,
    format_scalar,
    largest_real_root,
    parse_scalar,
    real_roots,
    sqrt,
    sturm_count,
    surd,
)


def test_sturm_count_examples():
    assert sturm_count(poly(1, 0, -2), 1, 2) == 1
    assert sturm_count(poly(1, 1, -2), 0, 3) == 1
    assert sturm_count(poly(1, 2, -4, -6), 1, 2) == 1


def test_sturm_count_half_open():
    # roots 1 and -2; (1, 3] excludes 1, (-2, 1] includes it
    p = poly(1, 1, -2)
    assert sturm_count(p, 1, 3) == 0
    assert sturm_count(p, -2, 1) == 1


def test_sturm_count_zero_polynomial():
    with pytest.raises(ValueError, match="undefined root count"):
        sturm_count(IntPoly(), 0, 1)


def test_largest_real_root_examples():
    assert largest_real_root(poly(1, 0, -3)) == sqrt(3)
    assert isinstance(largest_real_root(poly(1, 0, -3)), Surd)
    g = largest_real_root(poly(1, 2, -4, -6))
    assert isinstance(g, AlgebraicReal)
    assert abs(float(g) - 1.8662) < 1e-4
    assert abs(float(largest_real_root(poly(23, 45, -185))) - 2.02182) < 1e-5


def test_largest_real_root_none():
    with pytest.raises(ValueError):
        largest_real_root(poly(1, 0, 1))


def test_compare_examples():
    assert compare(sqrt(2), Fraction(3, 2)) == LT
    alt = AlgebraicReal(poly(1, 2, -4), Fraction(1), Fraction(2))
    assert compare(surd(-1, 1, 5), alt) == EQ
    assert compare(Fraction(19, 10), sqrt(2)) == GT


def test_evaluate_examples():
    assert evaluate(poly(1, 0, -5, 0), Fraction(19, 10)) == Fraction(-2641, 1000)
    assert evaluate(poly(1, 1, -2), 1) == 0
    assert evaluate(poly(1, 0, -3), sqrt(3)) == 0


def test_evaluate_algebraic_sign_certified():
    g = largest_real_root(poly(1, 2, -4, -6))
    assert evaluate(poly(1, 2, -4, -6), g) == 0
    iv = evaluate(poly(1, 0, -3), g)  # g^2 - 3 > 0 since g > sqrt(3)
    assert iv.sign == 1


def test_surd_demotes_to_rational():
    assert sqrt(4) == 2 and isinstance(sqrt(4), Fraction)
    assert sqrt(8) == surd(0, 2, 2)
    assert surd(1, 1, 5) * surd(1, -1, 5) == -4


def test_factorization_string():
    assert format_factorization(poly(1, 0, -2) * poly(1, -3)) == "(x-3)(x^2-2)"
    assert factor_poly(poly(2, -4)) == [(poly(1, -2), 1)]


def _oracle_real_root_count(coeffs_low_first):
    x = sympy.Symbol("x")
    return len(set(sympy.Poly(list(reversed(coeffs_low_first)), x).real_roots()))


coeff_lists = st.lists(st.integers(-20, 20), min_size=2, max_size=9).filter(lambda c: c[-1] != 0)


@settings(max_examples=60, deadline=None)
@given(coeff_lists)
def test_sturm_matches_independent_oracle(coeffs):
    p = IntPoly(coeffs)
    B = p.cauchy_bound() + 1
    assert sturm_count(p, -B, B) == _oracle_real_root_count(coeffs)


@settings(max_examples=40, deadline=None)
@given(coeff_lists)
def test_largest_root_brackets(coeffs):
    p = IntPoly(coeffs)
    assume(_oracle_real_root_count(coeffs) > 0)
    r = largest_real_root(p)
    assert evaluate(p, r) == 0
    B = p.cauchy_bound() + 1
    if isinstance(r, AlgebraicReal):
        assert sturm_count(p, r.hi, B) == 0
        q = r.poly
        assert q.sign_at(r.lo) * q.sign_at(r.hi) <= 0
    else:
        assert all(compare(x, r) <= 0 for x in real_roots(p))


rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)
radicands = st.sampled_from([2, 3, 5, 6, 7])


@st.composite
def scalars(draw):
    kind = draw(st.integers(0, 2))
    if kind == 0:
        return draw(rationals)
    if kind == 1:
        return surd(draw(rationals), draw(rationals), draw(radicands))
    # a root of a random cubic with integer coefficients
    coeffs = draw(st.lists(st.integers(-6, 6), min_size=3, max_size=3)) + [1]
    return largest_real_root(IntPoly(coeffs))


@settings(max_examples=80, deadline=None)
@given(scalars(), scalars(), scalars())
def test_compare_is_total_order(a, b, c):
    assert compare(a, b) == -compare(b, a)
    assert compare(a, a) == EQ
    if compare(a, b) <= 0 and compare(b, c) <= 0:
        assert compare(a, c) <= 0
    # agrees with floating point away from ties
    if abs(float(a) - float(b)) > 1e-9:
        assert compare(a, b) == (1 if float(a) > float(b) else -1)


@given(rationals, rationals, radicands)
def test_surd_conjugate_product_is_norm(a, b, d):
    x = surd(a, b, d)
    y = surd(a, -b, d)
    assert x * y == a * a - d * b * b


@settings(max_examples=60, deadline=None)
@given(scalars())
def test_format_parse_round_trip(x):
    assert compare(parse_scalar(format_scalar(x)), x) == EQ


@pytest.mark.parametrize(
    "text,expected",
    [
        ("sqrt(6)", sqrt(6)),
        ("2*sqrt(3)", surd(0, 2, 3)),
        ("19/10", Fraction(19, 10)),
        ("(sqrt(5)-1)/2", surd(Fraction(-1, 2), Fraction(1, 2), 5)),
        ("sqrt(5)-1", surd(-1, 1, 5)),
        ("-1", Fraction(-1)),
        ("2sqrt(2)", surd(0, 2, 2)),
        ("3^2/2", Fraction(9, 2)),
    ],
)
def test_parse_examples(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize(
    "text,message",
    [
        ("sqrt(2)+sqrt(3)", "mixed radicands"),
        ("sqrt(-2)", "negative"),
        ("1/0", "division by zero"),
        ("x+1", "unsupported"),
        ("root(x^2-2, [-2,2])", "exactly one root"),
        ("import os", "cannot parse"),
        ("", "empty"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(DomainError, match=message):
        parse_scalar(text)


def test_parse_root_form():
    g = parse_scalar("root(x^3+2x^2-4x-6, [1.8,1.9])")
    assert compare(g, largest_real_root(poly(1, 2, -4, -6))) == EQ
