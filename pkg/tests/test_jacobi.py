from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trijac.jacobi import (
    ApparentSingularityError,
    DegeneracyReport,
    ParameterPoint,
    classify_degenerate,
    degenerate_transform,
    even_odd_form,
    gegenbauer,
    gegenbauer_via_jacobi,
    jacobi,
    legendre,
)
from trijac.poly import NEG_INF, Poly, pochhammer

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def test_jacobi_base_cases():
    assert jacobi(0, F(7, 3), F(-1, 9)) == Poly([1])
    assert jacobi(1, F(0), F(0)) == Poly([0, 1])
    assert jacobi(1, F(-1), F(-1)).is_zero
    assert legendre(2) == Poly([F(-1, 2), 0, F(3, 2)])


@given(st.integers(0, 9), rationals, rationals)
def test_value_at_one_is_pochhammer_ratio(n, alpha, beta):
    assert jacobi(n, alpha, beta)(1) == pochhammer(alpha + 1, n) / factorial(n)


@given(st.integers(0, 10), rationals, rationals)
def test_parameter_swap_symmetry(n, alpha, beta):
    assert jacobi(n, alpha, beta) == jacobi(n, beta, alpha).reflected() * ((-1) ** n)


@given(st.integers(0, 10), rationals)
def test_gegenbauer_reflection_symmetry(n, lam):
    p = gegenbauer(n, lam)
    assert p.reflected() == p * ((-1) ** n)


def test_gegenbauer_values():
    assert gegenbauer(1, F(3, 4)) == Poly([0, F(3, 2)])
    assert gegenbauer(3, F(0)).is_zero
    assert gegenbauer(0, F(0)) == Poly([1])
    # the half-negative case, cross-checked against its closed form
    assert gegenbauer(2, F(-1, 2)) == Poly([F(1, 2), 0, F(-1, 2)])
    for n in range(2, 8):
        closed = (
            Poly([1, 0, -1]) * jacobi(n - 2, F(1), F(1)) * F(1, 2 * (n - 1))
        )
        assert gegenbauer(n, F(-1, 2)) == closed


def test_gegenbauer_via_jacobi():
    assert gegenbauer_via_jacobi(2, F(1)) == gegenbauer(2, F(1))
    assert gegenbauer_via_jacobi(4, F(1, 2)) == legendre(4)
    with pytest.raises(ApparentSingularityError):
        gegenbauer_via_jacobi(1, F(-1, 2))


@settings(max_examples=40)
@given(st.integers(0, 9), rationals)
def test_rescaling_agrees_where_defined(n, lam):
    if pochhammer(n + 2 * lam, n) == 0:
        with pytest.raises(ApparentSingularityError):
            gegenbauer_via_jacobi(n, lam)
    else:
        assert gegenbauer_via_jacobi(n, lam) == gegenbauer(n, lam)


def test_even_odd_form_examples():
    assert even_odd_form(0, F(5)) == Poly([1])
    assert even_odd_form(2, F(0)) == Poly([F(-1, 2), 0, F(3, 2)])
    # degree one: the split sum collapses to (alpha + 1) x
    for alpha in (F(0), F(1, 2), F(-3)):
        assert even_odd_form(1, alpha) == Poly([0, alpha + 1])


@given(st.integers(0, 11), rationals)
def test_even_odd_form_matches_sum_form(n, alpha):
    assert even_odd_form(n, alpha) == jacobi(n, alpha, alpha)


def test_classify_identically_zero():
    report = classify_degenerate(1, ParameterPoint(-1, -1))
    assert report.identically_zero
    assert report.true_degree == NEG_INF
    assert "65" in report.applicable_cases
    assert jacobi(1, F(-1), F(-1)).is_zero
    # the boundary-zero conditions overlap here; both transforms degenerate to 0
    assert degenerate_transform(1, ParameterPoint(-1, -1), "66b").is_zero


def test_classify_zero_at_plus_one():
    report = classify_degenerate(2, ParameterPoint(-1, 0))
    assert not report.identically_zero
    assert report.true_degree == 2
    assert report.zero_mult_at_plus1 == 1
    assert report.zero_mult_at_minus1 == 0
    poly = jacobi(2, F(-1), F(0))
    assert poly(1) == 0 and poly.derivative()(1) != 0


def test_classify_no_flags_for_large_negative_beta():
    report = classify_degenerate(3, ParameterPoint(F(1, 2), -7))
    assert report.applicable_cases == frozenset()
    assert report.true_degree == 3
    assert report.zero_mult_at_plus1 == 0 and report.zero_mult_at_minus1 == 0


def test_classify_rejects_nonpositive_degree():
    with pytest.raises(ValueError):
        classify_degenerate(0, ParameterPoint(0, 0))


def test_transform_zero_at_one():
    # multiplicity-one zero at x = 1 peeled off explicitly
    point = ParameterPoint(-1, 0)
    expected = Poly([F(-1, 2), F(1, 2)]) * jacobi(1, F(1), F(0)) * (
        pochhammer(F(2), 1) * factorial(1) / factorial(2)
    )
    assert degenerate_transform(2, point, "66b") == expected == jacobi(2, F(-1), F(0))


def test_transform_double_boundary_zero():
    point = ParameterPoint(-1, -2)
    got = degenerate_transform(4, point, "f")
    expected = (
        Poly([F(-1, 2), F(1, 2)])
        * Poly([F(1, 2), F(1, 2)]) ** 2
        * jacobi(1, F(1), F(2))
    )
    assert got == expected == jacobi(4, F(-1), F(-2))


def test_transform_degree_drop():
    point = ParameterPoint(-2, -3)
    report = classify_degenerate(3, point)
    assert "66a" in report.applicable_cases
    assert degenerate_transform(3, point, "66a") == jacobi(3, F(-2), F(-3))


def test_transform_rejects_inapplicable_case():
    with pytest.raises(ValueError):
        degenerate_transform(3, ParameterPoint(F(1, 2), F(1, 3)), "66b")
    with pytest.raises(ValueError):
        degenerate_transform(3, ParameterPoint(-1, 0), "bogus")


@pytest.mark.parametrize("alpha", range(-4, 2))
@pytest.mark.parametrize("beta", range(-4, 2))
def test_classification_grid_agrees_with_inspection(alpha, beta):
    point = ParameterPoint(alpha, beta)
    for n in range(1, 9):
        report = classify_degenerate(n, point)
        poly = jacobi(n, F(alpha), F(beta))
        assert report.identically_zero == poly.is_zero
        if poly.is_zero:
            continue
        assert report.true_degree == poly.degree
        assert report.zero_mult_at_plus1 == poly.root_multiplicity(1)
        assert report.zero_mult_at_minus1 == poly.root_multiplicity(-1)
        for case in report.applicable_cases:
            assert degenerate_transform(n, point, case) == poly


def test_report_is_plain_data():
    report = classify_degenerate(2, ParameterPoint(-1, 0))
    assert isinstance(report, DegeneracyReport)
    assert isinstance(report.applicable_cases, frozenset)
