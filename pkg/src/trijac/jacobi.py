"""Jacobi, Gegenbauer and Legendre polynomials as exact Poly values.

The canonical constructor is the explicit terminating sum

    P_n(x) = sum_k (n+a+b+1)_k (a+k+1)_{n-k} / (k! (n-k)!) ((x-1)/2)^k,

which is a polynomial for every rational parameter pair, with no artificial
singularities.  The degeneracy classifier describes what happens for
negative-integer parameters: identical vanishing, degree drop, and forced
zeros at x = +-1, together with the transformation formulas that expose
those features.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial

from .poly import NEG_INF, Poly, Scalar, as_rational, is_integer, pochhammer


class ApparentSingularityError(ArithmeticError):
    """A rescaling denominator vanished; the quantity extends by continuity."""


@dataclass(frozen=True)
class ParameterPoint:
    """An exact (alpha, beta) parameter pair."""

    alpha: Fraction
    beta: Fraction

    def __init__(self, alpha: Scalar, beta: Scalar):
        object.__setattr__(self, "alpha", as_rational(alpha))
        object.__setattr__(self, "beta", as_rational(beta))

    def shifted(self, k: Scalar) -> ParameterPoint:
        return ParameterPoint(self.alpha + k, self.beta + k)

    def negated(self) -> ParameterPoint:
        return ParameterPoint(-self.alpha, -self.beta)


@cache
def jacobi(n: int, alpha: Fraction, beta: Fraction) -> Poly:
    """P_n with parameters (alpha, beta), exact, any rational parameters."""
    if n < 0:
        raise ValueError("degree index must be nonnegative")
    alpha, beta = as_rational(alpha), as_rational(beta)
    acc = Poly()
    base = Poly((Fraction(-1, 2), Fraction(1, 2)))  # (x-1)/2
    base_pow = Poly.constant(1)
    for k in range(n + 1):
        c = (
            pochhammer(n + alpha + beta + 1, k)
            * pochhammer(alpha + k + 1, n - k)
            / (factorial(k) * factorial(n - k))
        )
        if c != 0:
            acc = acc + base_pow * c
        if k < n:
            base_pow = base_pow * base
    return acc


def legendre(n: int) -> Poly:
    return jacobi(n, Fraction(0), Fraction(0))


@cache
def gegenbauer(n: int, lam: Fraction) -> Poly:
    """C_n with parameter lambda via the explicit sum over (2x)^{n-2k}.

    For lambda = 0 every term vanishes unless n = 0, so the convention
    C_n^(0) = delta_{n,0} holds automatically.
    """
    if n < 0:
        raise ValueError("degree index must be nonnegative")
    lam = as_rational(lam)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        power = n - 2 * k
        coeffs[power] = (
            (-1) ** k
            * pochhammer(lam, n - k)
            / (factorial(k) * factorial(power))
            * Fraction(2) ** power
        )
    return Poly(coeffs)


def gegenbauer_via_jacobi(n: int, lam: Scalar) -> Poly:
    """C_n computed through the symmetric-Jacobi rescaling.

    Raises ApparentSingularityError when the rescaling denominator
    (n+2*lambda)_n vanishes; callers fall back to the direct sum.
    """
    lam = as_rational(lam)
    den = pochhammer(n + 2 * lam, n)
    if den == 0:
        raise ApparentSingularityError(
            f"(n+2*lambda)_n = 0 at n={n}, lambda={lam}"
        )
    scale = Fraction(2) ** (2 * n) * pochhammer(lam, n) / den
    return jacobi(n, lam - Fraction(1, 2), lam - Fraction(1, 2)) * scale


def even_odd_form(n: int, alpha: Scalar) -> Poly:
    """P_n with equal parameters, built from the parity-split sums."""
    alpha = as_rational(alpha)
    if n == 0:
        return Poly.constant(1)
    coeffs = [Fraction(0)] * (n + 1)
    if n % 2 == 0:
        m = n // 2
        pref = Fraction(2) ** (-2 * m) * pochhammer(alpha + m + 1, m)
        for k in range(m + 1):
            power = 2 * m - 2 * k
            coeffs[power] = (
                pref
                * (-1) ** k
                * pochhammer(alpha + m + Fraction(1, 2), m - k)
                / (factorial(k) * factorial(power))
                * Fraction(2) ** power
            )
    else:
        m = (n + 1) // 2
        pref = Fraction(2) ** (1 - 2 * m) * pochhammer(alpha + m, m)
        for k in range(m):
            power = 2 * m - 1 - 2 * k
            coeffs[power] = (
                pref
                * (-1) ** k
                * pochhammer(alpha + m + Fraction(1, 2), m - 1 - k)
                / (factorial(k) * factorial(power))
                * Fraction(2) ** power
            )
    return Poly(coeffs)


DEGENERACY_CASES = ("65", "66a", "66b", "66c", "d", "e", "f")


@dataclass(frozen=True)
class DegeneracyReport:
    """Predicted shape of P_n for integer-degenerate parameters.

    The multiplicity fields refer to nonzero polynomials; when
    ``identically_zero`` is set the degree is NEG_INF and the
    multiplicities are reported as 0.
    """

    identically_zero: bool
    true_degree: int | float
    zero_mult_at_plus1: int
    zero_mult_at_minus1: int
    applicable_cases: frozenset[str]


def case_applies(case: str, n: int, p: ParameterPoint) -> bool:
    """The stated parameter conditions of one degeneracy case, exactly.

    These are pure integrality-and-range conditions; the transformation
    formulas hold whenever they do, including on the overlap with the
    identically-zero region (where both sides vanish).
    """
    if n <= 0:
        raise ValueError("degeneracy cases are stated for n > 0")
    al, be = p.alpha, p.beta
    a_int, b_int = is_integer(al), is_integer(be)
    if case == "65":
        return (
            a_int
            and b_int
            and al <= -1
            and be <= -1
            and max(-al, -be) <= n <= -al - be - 1
        )
    if case == "66a":
        return (
            is_integer(al + be)
            and al + be <= -2
            and n + al + be + 1 <= 0
            and 2 * n + al + be >= 0
        )
    if case == "66b":
        return a_int and al <= -1 and n + al >= 0
    if case == "66c":
        return b_int and be <= -1 and n + be >= 0
    if case == "d":
        return (
            a_int
            and b_int
            and be + 2 <= al <= -1
            and max(-al, Fraction(-al - be, 2)) <= n <= -be - 1
        )
    if case == "e":
        return (
            a_int
            and b_int
            and al + 2 <= be <= -1
            and max(-be, Fraction(-al - be, 2)) <= n <= -al - 1
        )
    if case == "f":
        return a_int and b_int and al <= -1 and be <= -1 and n >= -al - be
    raise ValueError(f"unknown case {case!r}")


def classify_degenerate(n: int, p: ParameterPoint) -> DegeneracyReport:
    """Classify the degeneracies of P_n at the exact parameter point.

    All conditions are integer conditions checked with exact
    denominator-equals-one tests; non-integer parameters where an integer
    is required short-circuit to "no degeneracy".  The degree and
    multiplicity fields describe the nonzero situation; applicable_cases
    lists every case whose conditions hold, including alongside the
    identically-zero case.
    """
    al, be = p.alpha, p.beta
    cases = frozenset(c for c in DEGENERACY_CASES if case_applies(c, n, p))
    zero = "65" in cases
    if zero:
        return DegeneracyReport(True, NEG_INF, 0, 0, cases)
    degree_drop = "66a" in cases
    degree = int(-n - al - be - 1) if degree_drop else n
    return DegeneracyReport(
        identically_zero=False,
        true_degree=degree,
        zero_mult_at_plus1=int(-al) if "66b" in cases else 0,
        zero_mult_at_minus1=int(-be) if "66c" in cases else 0,
        applicable_cases=cases,
    )


def degenerate_transform(n: int, p: ParameterPoint, case: str) -> Poly:
    """Right-hand side of the named degeneracy transformation.

    The returned polynomial equals jacobi(n, alpha, beta) whenever the
    case's parameter conditions hold; violated conditions raise ValueError.
    """
    al, be = p.alpha, p.beta
    if not case_applies(case, n, p):
        raise ValueError(f"case {case} conditions do not hold at n={n}, {p}")

    half_minus = Poly((Fraction(-1, 2), Fraction(1, 2)))  # (x-1)/2
    half_plus = Poly((Fraction(1, 2), Fraction(1, 2)))  # (x+1)/2

    if case == "65":
        return Poly()
    if case == "66a":
        length = int(2 * n + al + be + 1)
        ratio = pochhammer(-n - be, length) / pochhammer(-n - al - be, length)
        return jacobi(int(-n - al - be - 1), al, be) * ratio
    if case == "66b":
        scale = (
            pochhammer(n + al + be + 1, int(-al))
            * factorial(int(n + al))
            / factorial(n)
        )
        return half_minus ** int(-al) * jacobi(int(n + al), -al, be) * scale
    if case == "66c":
        scale = (
            pochhammer(n + al + be + 1, int(-be))
            * factorial(int(n + be))
            / factorial(n)
        )
        return half_plus ** int(-be) * jacobi(int(n + be), al, -be) * scale
    if case == "d":
        return (-half_minus) ** int(-al) * jacobi(int(-n - be - 1), -al, be)
    if case == "e":
        sign = -1 if (int(al) + 1) % 2 else 1
        return half_plus ** int(-be) * jacobi(int(-n - al - 1), al, -be) * sign
    # case "f"
    return (
        half_minus ** int(-al)
        * half_plus ** int(-be)
        * jacobi(int(n + al + be), -al, -be)
    )
