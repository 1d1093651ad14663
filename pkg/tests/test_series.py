from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trijac.jacobi import gegenbauer, jacobi
from trijac.poly import Poly
from trijac.series import (
    Series,
    distance_kernel,
    gegenbauer_generating,
    jacobi_generating,
)

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)


def series_of(coeffs, order=6):
    return Series(order, [Poly.constant(c) for c in coeffs])


def test_mul_examples():
    one_plus = series_of([1, 1], order=2)
    one_minus = series_of([1, -1], order=2)
    assert one_plus * one_minus == series_of([1, 0, -1], order=2)
    s = series_of([2, 3, 5], order=2)
    assert s * Series.one(2) == s


def test_mul_requires_matching_order():
    with pytest.raises(ValueError):
        Series.one(3) * Series.one(4)


def test_sqrt_squares_back():
    base = distance_kernel(8)
    root = base.pow(F(1, 2))
    assert root * root == base


def test_recip_geometric():
    assert series_of([1, -1], order=3).recip() == series_of([1, 1, 1, 1], order=3)
    assert Series.one(5).recip() == Series.one(5)


def test_recip_of_distance_kernel_is_unit_gegenbauer():
    # independent low-degree values of the lambda = 1 family
    expected = [
        Poly([1]),
        Poly([0, 2]),
        Poly([-1, 0, 4]),
        Poly([0, -4, 0, 8]),
    ]
    inv = distance_kernel(4).recip()
    for n, want in enumerate(expected):
        assert inv.coefficient(n) == want
    assert inv.coefficient(4) == gegenbauer(4, F(1))


def test_recip_requires_invertible_constant():
    with pytest.raises(ValueError):
        series_of([0, 1]).recip()
    with pytest.raises(ValueError):
        Series(3, [Poly([0, 1])]).recip()  # constant coefficient is x


def test_pow_examples():
    one_plus = series_of([1, 1], order=3)
    assert one_plus.pow(F(2)) == series_of([1, 2, 1], order=3)
    # hand binomial expansion of the square root, truncated at order 2
    half = distance_kernel(2).pow(F(1, 2))
    assert half.coefficient(0) == Poly([1])
    assert half.coefficient(1) == Poly([0, -1])
    assert half.coefficient(2) == Poly([F(1, 2), 0, F(-1, 2)])
    assert one_plus.pow(F(0)) == Series.one(3)


def test_pow_requires_unit_constant():
    with pytest.raises(ValueError):
        series_of([2, 1]).pow(F(1, 2))


@settings(max_examples=25)
@given(rationals, rationals)
def test_pow_additivity(e1, e2):
    base = Series(6, [Poly([1]), Poly([0, 1]), Poly([F(1, 3)])])
    assert base.pow(e1) * base.pow(e2) == base.pow(e1 + e2)


@settings(max_examples=25)
@given(st.lists(rationals, min_size=1, max_size=5))
def test_recip_roundtrip(tail):
    s = Series(5, [Poly.constant(F(3, 2))] + [Poly([c, 1]) for c in tail])
    assert s * s.recip() == Series.one(5)


def test_jacobi_generating_examples():
    series = jacobi_generating(F(1, 3), F(-2, 5), 10)
    assert series.coefficient(0) == Poly([1])
    for n in range(11):
        assert series.coefficient(n) == jacobi(n, F(1, 3), F(-2, 5))


def test_jacobi_generating_legendre_case():
    series = jacobi_generating(F(0), F(0), 6)
    for n in range(7):
        assert series.coefficient(n) == jacobi(n, F(0), F(0))


def test_gegenbauer_generating_conventions():
    flat = gegenbauer_generating(F(0), 5)
    assert flat == Series.one(5)
    legendre = gegenbauer_generating(F(1, 2), 6)
    for n in range(7):
        assert legendre.coefficient(n) == jacobi(n, F(0), F(0))
    assert gegenbauer_generating(F(-1, 2), 4).coefficient(1) == Poly([0, -1])


@settings(max_examples=15)
@given(rationals, rationals)
def test_generating_series_convolution(nu, lam):
    order = 8
    prod = gegenbauer_generating(nu, order) * gegenbauer_generating(lam, order)
    assert prod == gegenbauer_generating(nu + lam, order)


@settings(max_examples=15)
@given(rationals)
def test_generating_series_cancellation(nu):
    order = 8
    prod = gegenbauer_generating(nu, order) * gegenbauer_generating(-nu, order)
    assert prod == Series.one(order)


@settings(max_examples=10)
@given(rationals, rationals)
def test_jacobi_generating_matches_sum_form(alpha, beta):
    order = 7
    series = jacobi_generating(alpha, beta, order)
    for n in range(order + 1):
        assert series.coefficient(n) == jacobi(n, alpha, beta)
