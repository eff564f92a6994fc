#!/usr/bin/env python3
"""
Tests for dense polynomial arithmetic over F_p
"""

import sys
import os

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest
from hypothesis import given, settings, strategies as st

from errors import DivisionByZeroPoly, PolynomialParseError
from fp_poly import (FpPoly, ZeroDegree, mul_coeffs, poly_arith, poly_gcd, poly_shift,
                     poly_xgcd, powmod_poly, squarefree_decomposition)
from oracles import exhaustive_roots, polys


def P(p, *coeffs):
    return FpPoly(p, coeffs)


def test_canonical_form():
    g = FpPoly(5, [6, -1, 0, 0])
    assert g.coeffs == (1, 4)
    assert g.degree == 1
    assert FpPoly.zero(5).degree is ZeroDegree.NEG_INFINITY
    assert FpPoly.zero(5).degree < 0
    assert FpPoly.zero(5).to_text() == "0"
    assert str(P(5, 1, 3, 1)) == "t^2 + 3*t + 1"


def test_text_round_trip():
    assert FpPoly.from_text(11, "1,3,1") == P(11, 1, 3, 1)
    assert FpPoly.from_text(11, "1,3,1").to_text() == "1,3,1"
    assert FpPoly.from_text(5, "7,0,0").to_text() == "2"


@pytest.mark.parametrize("text", ["", "1,,2", "1,-2", "a,b", "1.5", "1,\u00b2", "\u0663"])
def test_from_text_rejects_malformed(text):
    with pytest.raises(PolynomialParseError):
        FpPoly.from_text(5, text)


def test_arith_examples():
    assert poly_arith('mul', P(5, 1, 1), P(5, 4, 1)) == P(5, 4, 0, 1)
    assert poly_arith('divmod', P(5, 4, 0, 1), P(5, 1, 1)) == (P(5, 4, 1), FpPoly.zero(5))
    assert poly_arith('add', P(5, 1, 3, 1), P(5, 4, 2, 4)).is_zero()
    assert poly_arith('sub', P(5, 1, 3, 1), P(5, 1, 3, 1)).is_zero()


def test_division_by_zero():
    with pytest.raises(DivisionByZeroPoly):
        divmod(P(5, 1, 1), FpPoly.zero(5))
    with pytest.raises(ZeroDivisionError):
        P(5, 1, 1) % FpPoly.zero(5)


def test_gcd_examples():
    assert poly_gcd(P(5, 4, 0, 1), P(5, 4, 1)) == P(5, 4, 1)
    assert poly_gcd(P(5, 1, 0, 1), P(5, 1, 1)).is_one()
    assert poly_gcd(FpPoly.zero(5), P(5, 3, 3)) == P(5, 1, 1)


def test_powmod_examples():
    assert powmod_poly(FpPoly.gen(5), 5, P(5, 3, 0, 1)) == P(5, 0, 4)
    assert powmod_poly(FpPoly.gen(7), 1, P(7, 1, 2, 3, 1)) == FpPoly.gen(7)
    assert powmod_poly(P(5, 1, 1), 0, P(5, 1, 0, 1)).is_one()


def test_shift_examples():
    g = P(5, 4, 0, 1)
    assert poly_shift(g, 1) == P(5, 0, 2, 1)
    assert poly_shift(g, 0) == g
    assert poly_shift(poly_shift(g, 3), -3) == g


def test_squarefree_examples():
    g = FpPoly.from_roots(5, [1, 1, 2])
    assert set(squarefree_decomposition(g)) == {(P(5, 4, 1), 2), (P(5, 3, 1), 1)}
    h = P(5, 1, 0, 1)
    assert squarefree_decomposition(h) == [(h, 1)]
    assert squarefree_decomposition(P(5, 1, 0, 0, 0, 0, 1)) == [(P(5, 1, 1), 5)]


def test_squarefree_mixed_pth_power():
    """(t+1)^7 (t+2)^2 (t+3) over F_7 needs the p-th root step"""
    g = FpPoly.from_roots(7, [6] * 7 + [5, 5, 4])
    result = squarefree_decomposition(g)
    assert result == [(P(7, 3, 1), 1), (P(7, 2, 1), 2), (P(7, 1, 1), 7)]


def test_kronecker_matches_schoolbook():
    """Long operands go through big-integer packing; compare with the plain loop"""
    p = 1000003
    a = [(i * 7919 + 3) % p for i in range(60)]
    b = [(i * 104729 + 11) % p for i in range(45)]
    expected = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            expected[i + j] += x * y
    assert mul_coeffs(a, b, p) == [c % p for c in expected]


@given(polys(7), polys(7, nonzero=True))
def test_divmod_round_trip(g, h):
    q, r = divmod(g, h)
    assert q * h + r == g
    assert r.degree < h.degree


@given(polys(5, nonzero=True), polys(5, nonzero=True))
def test_gcd_divides_both(g, h):
    d = poly_gcd(g, h)
    assert d.is_monic()
    assert (g % d).is_zero() and (h % d).is_zero()


@given(polys(11, nonzero=True), polys(11, nonzero=True))
def test_xgcd_bezout(g, h):
    d, s, u = poly_xgcd(g, h)
    assert s * g + u * h == d
    assert d == poly_gcd(g, h)


@given(st.integers(min_value=0, max_value=64), polys(13, max_degree=5, nonzero=True))
def test_powmod_matches_repeated_multiplication(e, m):
    if m.degree < 1:
        return
    expected = FpPoly.one(13) % m
    for _ in range(e):
        expected = (expected * FpPoly.gen(13)) % m
    assert powmod_poly(FpPoly.gen(13), e, m) == expected


@given(polys(7), st.integers(min_value=0, max_value=6))
def test_shift_inverse(g, c):
    assert poly_shift(poly_shift(g, c), -c) == g
    assert all(poly_shift(g, c).evaluate(u) == g.evaluate((u + c) % 7) for u in range(7))


@settings(max_examples=200)
@given(polys(3, max_degree=10, nonzero=True))
def test_squarefree_reconstructs(g):
    g = g.monic()
    product = FpPoly.one(3)
    for factor, multiplicity in squarefree_decomposition(g):
        assert poly_gcd(factor, factor.derivative()).is_one()
        for _ in range(multiplicity):
            product = product * factor
    assert product == g


@pytest.mark.parametrize("p", [5, 7, 23, 101])
def test_frobenius_root_criterion(p):
    """gcd(f, t^p - t) is the product of (t - r) over the roots of f"""
    f = FpPoly.from_roots(p, [1, 3, 3]) * P(p, 2, 0, 1) + P(p, 0, 0, 0, 1)
    f = f.monic()
    x_p = powmod_poly(FpPoly.gen(p), p, f)
    rational = poly_gcd(f, x_p - FpPoly.gen(p))
    assert rational == FpPoly.from_roots(p, exhaustive_roots(f))
