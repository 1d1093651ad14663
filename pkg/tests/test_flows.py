from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trijac.flows import (
    StrictLowerWindow,
    build_PH,
    build_QH,
    exp_nilpotent,
    generator_matrices,
    p00_inverse_closed_form,
    verify_conjugation,
)
from trijac.jacobi import ParameterPoint, gegenbauer, jacobi
from trijac.poly import Poly
from trijac.triangles import (
    build_P,
    identity_window,
    is_identity,
    tri_add,
    tri_inverse,
    tri_mul,
    tri_scale,
)

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=5)
N0, SIZE = -2, 7


def test_flows_at_zero_are_identity():
    zero = ParameterPoint(0, 0)
    assert build_PH(zero, N0, SIZE) == identity_window(N0, SIZE)
    assert build_QH(zero, N0, SIZE) == identity_window(N0, SIZE)


def test_flow_factor_orderings_agree():
    point = ParameterPoint(F(1, 3), F(-2, 5))
    p00_inv = tri_inverse(build_P(ParameterPoint(0, 0), N0, SIZE))
    p_ab = build_P(point, N0, SIZE)
    assert tri_mul(p00_inv, p_ab) == tri_mul(p_ab, p00_inv) == build_PH(point, N0, SIZE)


@settings(max_examples=15)
@given(rationals, rationals, rationals, rationals)
def test_two_parameter_group_laws(a1, b1, a2, b2):
    p1, p2 = ParameterPoint(a1, b1), ParameterPoint(a2, b2)
    total = ParameterPoint(a1 + a2, b1 + b2)
    assert tri_mul(build_PH(p1, N0, SIZE), build_PH(p2, N0, SIZE)) == build_PH(
        total, N0, SIZE
    )
    assert tri_mul(build_QH(p1, N0, SIZE), build_QH(p2, N0, SIZE)) == build_QH(
        total, N0, SIZE
    )


def test_flow_inverses():
    point = ParameterPoint(1, 2)
    opposite = ParameterPoint(-1, -2)
    assert is_identity(
        tri_mul(build_QH(point, N0, SIZE), build_QH(opposite, N0, SIZE))
    )


def test_generator_closed_forms():
    gens = generator_matrices(N0, SIZE)
    half = F(1, 2)
    assert gens.b_q.entry(N0 + 1, N0) == Poly([-half, half])  # -(1-x)/2
    assert gens.a_q.entry(N0 + 1, N0) == Poly([half, half])  # (1+x)/2
    assert gens.a_p.entry(N0 + 1, N0) == jacobi(1, F(0), F(-1)) == Poly([half, half])
    assert gens.b_p.entry(N0 + 1, N0) == jacobi(1, F(-1), F(0))


def test_generator_reflection_pairing():
    gens = generator_matrices(N0, SIZE)
    for m, n in gens.a_q.indices():
        if m > n:
            sign = (-1) ** (m - n)
            assert gens.a_q.entry(m, n) == gens.b_q.entry(m, n).reflected() * sign
            assert gens.a_p.entry(m, n) == gens.b_p.entry(m, n).reflected() * sign


def test_generators_commute_pairwise():
    gens = generator_matrices(N0, SIZE)
    mats = [gens.a_p, gens.b_p, gens.a_q, gens.b_q]
    for i, left in enumerate(mats):
        for right in mats[i + 1 :]:
            assert tri_mul(left, right) == tri_mul(right, left)


def test_exp_of_zero_is_identity():
    zero = StrictLowerWindow(
        N0, 4, tuple(tuple(Poly() for _ in range(i + 1)) for i in range(4))
    )
    assert exp_nilpotent(zero) == identity_window(N0, 4)


def test_exp_rejects_nonzero_diagonal():
    with pytest.raises(ValueError):
        exp_nilpotent(identity_window(N0, 4))
    with pytest.raises(ValueError):
        StrictLowerWindow(0, 2, ((Poly([1]),), (Poly(), Poly([1]))))


@settings(max_examples=10)
@given(rationals, rationals)
def test_exponentials_reproduce_the_flows(alpha, beta):
    gens = generator_matrices(N0, SIZE)
    point = ParameterPoint(alpha, beta)
    exp_q = exp_nilpotent(
        tri_add(tri_scale(gens.a_q, alpha), tri_scale(gens.b_q, beta))
    )
    assert exp_q == build_QH(point, N0, SIZE)
    exp_p = exp_nilpotent(
        tri_add(tri_scale(gens.a_p, alpha), tri_scale(gens.b_p, beta))
    )
    assert exp_p == build_PH(point, N0, SIZE)


def test_legendre_toeplitz_inverse_offsets():
    inv = tri_inverse(build_P(ParameterPoint(0, 0), N0, SIZE))
    assert inv == p00_inverse_closed_form(N0, SIZE)
    assert inv.entry(N0 + 1, N0) == Poly([0, -1])
    for d in range(2, SIZE):
        closed = Poly([1, 0, -1]) * jacobi(d - 2, F(1), F(1)) * F(1, 2 * (d - 1))
        assert inv.entry(N0 + d, N0) == closed == gegenbauer(d, F(-1, 2))


def test_conjugation_trivial_and_random():
    assert verify_conjugation(ParameterPoint(0, 0), N0, SIZE).ok
    report = verify_conjugation(ParameterPoint(F(3, 4), F(-5, 2)), N0, SIZE)
    assert report.ok, report.first_failure()
    report = verify_conjugation(ParameterPoint(F(-2), F(1, 3)), 0, 6)
    assert report.ok, report.first_failure()
