"""Two commuting two-parameter groups of Toeplitz windows and their generators.

The additive parameter flows are realized by two families: one built from
ratios of diagonal-constant windows, the other diagonal-shifted.  Both are
images of a nilpotent exponential applied to explicit strictly lower
triangular generators, and the two flows are conjugate by the unitriangular
window L at parameters (0, 0).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import NamedTuple

from .jacobi import ParameterPoint, jacobi
from .poly import Poly
from .reporting import VerificationReport, poly_counterexample
from .triangles import (
    TriWindow,
    build_L,
    build_M,
    build_P,
    build_Q,
    identity_window,
    m_entry,
    toeplitz_window,
    tri_add,
    tri_inverse,
    tri_mul,
    tri_scale,
    window_from_entries,
)


class StrictLowerWindow(TriWindow):
    """A TriWindow with identically zero diagonal; nilpotent on the window."""

    def __post_init__(self):
        super().__post_init__()
        if any(not row[i].is_zero for i, row in enumerate(self.rows)):
            raise ValueError("diagonal entries must vanish")


def strict_lower_from_offsets(n0: int, size: int, offset_fn) -> StrictLowerWindow:
    values = [Poly()] + [offset_fn(d) for d in range(1, size)]
    return StrictLowerWindow(
        n0,
        size,
        tuple(tuple(values[i - j] for j in range(i + 1)) for i in range(size)),
    )


class Generators(NamedTuple):
    a_p: StrictLowerWindow
    b_p: StrictLowerWindow
    a_q: StrictLowerWindow
    b_q: StrictLowerWindow


def build_PH(p: ParameterPoint, n0: int, size: int) -> TriWindow:
    """The flow (P^(0,0))^{-1} P^(alpha,beta); Toeplitz factors commute."""
    p00 = build_P(ParameterPoint(0, 0), n0, size)
    return tri_mul(tri_inverse(p00), build_P(p, n0, size))


def build_QH(p: ParameterPoint, n0: int, size: int) -> TriWindow:
    """The diagonal-shifted flow; equal to the Q window itself."""
    return build_Q(p, n0, size)


def generator_matrices(n0: int, size: int) -> Generators:
    """Closed-form strictly lower generators of the two flows."""
    half = Fraction(1, 2)
    minus_one_minus_x = Poly((-half, -half))  # (-1-x)/2
    one_minus_x = Poly((half, -half))  # (1-x)/2
    a_q = strict_lower_from_offsets(
        n0, size, lambda d: minus_one_minus_x**d * Fraction(-1, d)
    )
    b_q = strict_lower_from_offsets(
        n0, size, lambda d: one_minus_x**d * Fraction(-1, d)
    )
    a_p = strict_lower_from_offsets(
        n0, size, lambda d: jacobi(d, Fraction(0), Fraction(-1)) * Fraction(1, d)
    )
    b_p = strict_lower_from_offsets(
        n0, size, lambda d: jacobi(d, Fraction(-1), Fraction(0)) * Fraction(1, d)
    )
    return Generators(a_p=a_p, b_p=b_p, a_q=a_q, b_q=b_q)


def exp_nilpotent(s: TriWindow) -> TriWindow:
    """sum_j s^j / j!; terminates because s^N vanishes on the window."""
    if any(not row[i].is_zero for i, row in enumerate(s.rows)):
        raise ValueError("exponential input must be strictly lower triangular")
    acc = identity_window(s.base_index, s.size)
    power = identity_window(s.base_index, s.size)
    for j in range(1, s.size):
        power = tri_mul(power, s)
        acc = tri_add(acc, tri_scale(power, Fraction(1, factorial(j))))
    return acc


def p00_inverse_closed_form(n0: int, size: int) -> TriWindow:
    """Inverse of the Legendre Toeplitz window by diagonal offset.

    Offset 0 gives 1, offset 1 gives -x, and offset d >= 2 gives
    (1-x^2)/(2(d-1)) P_{d-2}^(1,1)(x), the closed form of the
    lambda = -1/2 Gegenbauer family.
    """

    def offset(d: int) -> Poly:
        if d == 0:
            return Poly.constant(1)
        if d == 1:
            return Poly((0, -1))
        return (
            Poly((1, 0, -1))
            * jacobi(d - 2, Fraction(1), Fraction(1))
            * Fraction(1, 2 * (d - 1))
        )

    return toeplitz_window(n0, size, offset)


def verify_conjugation(p: ParameterPoint, n0: int, size: int) -> VerificationReport:
    """Both intertwining products plus the conjugation and the closed inverse."""
    report = VerificationReport(suite="conjugation")
    params = {"alpha": p.alpha, "beta": p.beta, "n0": n0, "N": size}
    zero = ParameterPoint(0, 0)
    l00 = build_L(zero, n0, size)
    l_ab = build_L(p, n0, size)
    ph = build_PH(p, n0, size)
    qh = build_QH(p, n0, size)

    _window_check(report, "PH*L00=L", params, tri_mul(ph, l00), l_ab)
    _window_check(report, "L00*QH=L", params, tri_mul(l00, qh), l_ab)
    conj = tri_mul(tri_mul(l00, qh), tri_inverse(l00))
    _window_check(report, "PH=L00*QH*L00^-1", params, conj, ph)

    inv = tri_inverse(l00)
    closed = window_from_entries(
        n0, size, lambda m, n: m_entry(m, n, Fraction(0), Fraction(0))
    )
    _window_check(report, "L00^-1 closed form", params, inv, closed)
    _window_check(report, "L00^-1 = M(0,0)", params, inv, build_M(zero, n0, size))
    return report


def _window_check(
    report: VerificationReport,
    case_id: str,
    params,
    got: TriWindow,
    expected: TriWindow,
) -> bool:
    for m, n in got.indices():
        if got.entry(m, n) != expected.entry(m, n):
            report.add_fail(
                case_id,
                params,
                poly_counterexample((m, n), got.entry(m, n), expected.entry(m, n)),
            )
            return False
    report.add_pass(case_id, params)
    return True
