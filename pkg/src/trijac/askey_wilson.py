"""Askey-Wilson polynomials, their connection coefficients, and q->1 limits.

Everything is evaluated in exact rational arithmetic.  The unit-circle
variable e^{i theta} is replaced by a nonzero rational surrogate z with
cos(theta) = (z + 1/z)/2; every identity in sight is a rational function of
that combination, so checking it at rational z certifies it without complex
numbers.  The q -> 1 limits run along schedules q_t = (1 - 2^-t)^D chosen so
that the fractional q-powers demanded by the parameter substitutions stay
exact rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .jacobi import ParameterPoint, jacobi
from .poly import Poly, Scalar, as_rational, pochhammer
from .reporting import (
    VerificationReport,
    format_params,
    poly_counterexample,
    rational_counterexample,
)
from .triangles import SingularParameterError, build_A36, build_B36, is_identity, tri_mul


def q_pochhammer(a: Scalar | Iterable[Scalar], q: Scalar, k: int) -> Fraction:
    """(a; q)_k = prod_{j<k} (1 - a q^j); iterables multiply factor-wise."""
    if k < 0:
        raise ValueError("q-pochhammer length must be nonnegative")
    q = as_rational(q)
    if not isinstance(a, (int, Fraction, str)):
        out = Fraction(1)
        for item in a:
            out *= q_pochhammer(item, q, k)
        return out
    a = as_rational(a)
    out = Fraction(1)
    power = Fraction(1)
    for _ in range(k):
        out *= 1 - a * power
        power *= q
    return out


def _terminating_phi(
    upper: Sequence[Fraction], lower: Sequence[Fraction], q: Fraction, z: Fraction, terms: int
) -> Fraction:
    """Basic hypergeometric sum with r = s+1, argument z, `terms` terms."""
    total = Fraction(0)
    term = Fraction(1)
    qj = Fraction(1)
    for j in range(terms):
        total += term
        if j == terms - 1:
            break
        num = Fraction(1)
        for u in upper:
            num *= 1 - u * qj
        den = Fraction(1)
        for l in lower:
            den *= 1 - l * qj
        den *= 1 - q * qj
        if den == 0:
            raise SingularParameterError("vanishing q-series denominator")
        term = term * num / den * z
        qj *= q
    return total


@dataclass(frozen=True)
class QPoint:
    """Exact evaluation context for the connection identities.

    One four-parameter family `a`, one partner family sharing the fourth
    parameter, the base q, and the circle surrogate z.  Construction rejects
    any parameter combination that would put a zero in the denominators of
    the polynomial or coefficient formulas within the working degree range.
    """

    q: Fraction
    a: tuple[Fraction, Fraction, Fraction, Fraction]
    b: tuple[Fraction, Fraction, Fraction]
    z: Fraction
    n_max: int = 8

    def __init__(self, q, a, b, z, n_max: int = 8):
        object.__setattr__(self, "q", as_rational(q))
        object.__setattr__(self, "a", tuple(as_rational(v) for v in a))
        object.__setattr__(self, "b", tuple(as_rational(v) for v in b))
        object.__setattr__(self, "z", as_rational(z))
        object.__setattr__(self, "n_max", n_max)
        self._validate()

    def _validate(self) -> None:
        if len(self.a) != 4 or len(self.b) != 3:
            raise ValueError("expected four a-parameters and three b-parameters")
        if not 0 < self.q < 1:
            raise SingularParameterError("q must lie strictly between 0 and 1")
        if self.z == 0 or any(v == 0 for v in self.a) or any(v == 0 for v in self.b):
            raise SingularParameterError("parameters and z must be nonzero")
        qpow = [self.q**e for e in range(2 * self.n_max + 1)]
        fam_a = self.a
        fam_b = self.b_family
        products = [x * y for x, y in itertools.combinations(fam_a, 2)]
        products += [x * y for x, y in itertools.combinations(fam_b, 2)]
        products.append(fam_a[0] * fam_a[1] * fam_a[2] * fam_a[3])
        products.append(fam_b[0] * fam_b[1] * fam_b[2] * fam_b[3])
        for value in products:
            for p in qpow:
                if value * p == 1:
                    raise SingularParameterError(
                        f"parameter product {value} collides with a q-power"
                    )

    @property
    def b_family(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (*self.b, self.a[3])

    @property
    def cos_theta(self) -> Fraction:
        return (self.z + 1 / self.z) / 2


def aw_value(
    n: int, params: Sequence[Fraction], q: Fraction, z: Fraction
) -> Fraction:
    """The four-parameter polynomial at cos(theta) = (z + 1/z)/2, exact."""
    a1, a2, a3, a4 = params
    prefactor = q_pochhammer((a1 * a2, a1 * a3, a1 * a4), q, n) / a1**n
    total = Fraction(0)
    term = Fraction(1)
    qj = Fraction(1)
    abcd = a1 * a2 * a3 * a4 * q ** (n - 1)
    for j in range(n + 1):
        total += term
        if j == n:
            break
        num = (1 - q**-n * qj) * (1 - abcd * qj)
        num *= (1 - a1 * qj * z) * (1 - a1 * qj / z)
        den = (1 - a1 * a2 * qj) * (1 - a1 * a3 * qj) * (1 - a1 * a4 * qj)
        den *= 1 - q * qj
        if den == 0:
            raise SingularParameterError("vanishing denominator in the polynomial sum")
        term = term * num / den * q
        qj *= q
    return prefactor * total


def aw_poly(n: int, pt: QPoint, family: str = "a") -> Fraction:
    """Evaluate the degree-n polynomial for the chosen parameter family."""
    params = pt.a if family == "a" else pt.b_family
    return aw_value(n, params, pt.q, pt.z)


def conn_coeff_fwd(n: int, k: int, pt: QPoint) -> Fraction:
    """Coefficient of the degree-k a-family term in the b-family polynomial."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    q = pt.q
    a1, a2, a3, a4 = pt.a
    b1, b2, b3 = pt.b
    pref = (
        q ** (k * (k - n))
        * q_pochhammer(q, q, n)
        / (a4 ** (n - k) * q_pochhammer(q, q, n - k) * q_pochhammer(q, q, k))
    )
    num = q_pochhammer(b1 * b2 * b3 * a4 * q ** (n - 1), q, k)
    den = q_pochhammer(a1 * a2 * a3 * a4 * q ** (k - 1), q, k)
    if den == 0:
        raise SingularParameterError("vanishing coefficient denominator")
    pref *= num / den
    pref *= q_pochhammer(
        (b1 * a4 * q**k, b2 * a4 * q**k, b3 * a4 * q**k), q, n - k
    )
    upper = (
        q ** (k - n),
        b1 * b2 * b3 * a4 * q ** (n + k - 1),
        a1 * a4 * q**k,
        a2 * a4 * q**k,
        a3 * a4 * q**k,
    )
    lower = (
        b1 * a4 * q**k,
        b2 * a4 * q**k,
        b3 * a4 * q**k,
        a1 * a2 * a3 * a4 * q ** (2 * k),
    )
    return pref * _terminating_phi(upper, lower, q, q, n - k + 1)


def conn_coeff_bwd(n: int, k: int, pt: QPoint) -> Fraction:
    """Coefficient of the degree-k b-family term in the a-family polynomial.

    This is the summation-reversed companion of the forward coefficient.  As
    printed, its source has a typo in the last denominator parameter of the
    terminating series: the exponent must be 2-2n rather than 1-2n.  The
    corrected form used here is exactly the forward formula with the two
    families interchanged, and is pinned by the inversion tests.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    q = pt.q
    a1, a2, a3, a4 = pt.a
    b1, b2, b3 = pt.b
    exponent = (n - k) * (n + k - 1)
    assert exponent % 2 == 0
    pref = (
        (-1) ** (n - k)
        * q ** (-(exponent // 2))
        * q_pochhammer(q, q, n)
        / (a4 ** (n - k) * q_pochhammer(q, q, n - k) * q_pochhammer(q, q, k))
    )
    num = q_pochhammer(a1 * a2 * a3 * a4 * q ** (n - 1), q, n)
    den = q_pochhammer(b1 * b2 * b3 * a4 * q ** (k - 1), q, k) * q_pochhammer(
        b1 * b2 * b3 * a4 * q ** (2 * k), q, n - k
    )
    if den == 0:
        raise SingularParameterError("vanishing coefficient denominator")
    pref *= num / den
    pref *= q_pochhammer(
        (b1 * a4 * q**k, b2 * a4 * q**k, b3 * a4 * q**k), q, n - k
    )
    upper = (
        q ** (k - n),
        q ** (1 - k - n) / (b1 * b2 * b3 * a4),
        q ** (1 - n) / (a1 * a4),
        q ** (1 - n) / (a2 * a4),
        q ** (1 - n) / (a3 * a4),
    )
    lower = (
        q ** (1 - n) / (b1 * a4),
        q ** (1 - n) / (b2 * a4),
        q ** (1 - n) / (b3 * a4),
        q ** (2 - 2 * n) / (a1 * a2 * a3 * a4),
    )
    return pref * _terminating_phi(upper, lower, q, q, n - k + 1)


def verify_connection(n_max: int, pt: QPoint) -> VerificationReport:
    """Both connection expansions, exactly, at the rational point z."""
    report = VerificationReport(suite="connection")
    params = {"q": pt.q, "a": pt.a, "b": pt.b, "z": pt.z}
    a_values = [aw_poly(k, pt, "a") for k in range(n_max + 1)]
    b_values = [aw_poly(k, pt, "b") for k in range(n_max + 1)]
    for n in range(n_max + 1):
        lhs = b_values[n]
        rhs = sum(conn_coeff_fwd(n, k, pt) * a_values[k] for k in range(n + 1))
        if not report.check(
            f"expand b-family, n={n}",
            lhs == rhs,
            params,
            rational_counterexample(n, lhs, rhs),
        ):
            return report
        lhs = a_values[n]
        rhs = sum(conn_coeff_bwd(n, k, pt) * b_values[k] for k in range(n + 1))
        if not report.check(
            f"expand a-family, n={n}",
            lhs == rhs,
            params,
            rational_counterexample(n, lhs, rhs),
        ):
            return report
    return report


def connection_matrices_inverse(n_max: int, pt: QPoint) -> bool:
    """The two coefficient triangles multiply to the identity both ways."""
    fwd = [[conn_coeff_fwd(n, k, pt) for k in range(n + 1)] for n in range(n_max + 1)]
    bwd = [[conn_coeff_bwd(n, k, pt) for k in range(n + 1)] for n in range(n_max + 1)]
    for first, second in ((fwd, bwd), (bwd, fwd)):
        for n in range(n_max + 1):
            for m in range(n + 1):
                total = sum(first[n][k] * second[k][m] for k in range(m, n + 1))
                if total != (1 if n == m else 0):
                    return False
    return True


# --- the q -> 1 limit machinery ---------------------------------------------


def _int_nth_root(value: int, n: int) -> int | None:
    if value < 0:
        if n % 2 == 0:
            return None
        root = _int_nth_root(-value, n)
        return None if root is None else -root
    if value in (0, 1):
        return value
    lo, hi = 1, 1 << ((value.bit_length() + n - 1) // n + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**n < value:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**n == value else None


def exact_rational_pow(base: Scalar, exponent: Scalar) -> Fraction:
    """base**exponent when the result is exactly rational; error otherwise."""
    base, exponent = as_rational(base), as_rational(exponent)
    if exponent.denominator == 1:
        return base**exponent.numerator
    if base == 0:
        return Fraction(0)
    num = _int_nth_root(base.numerator, exponent.denominator)
    den = _int_nth_root(base.denominator, exponent.denominator)
    if num is None or den is None:
        raise ValueError(f"{base}**{exponent} is not rational")
    return Fraction(num, den) ** exponent.numerator


@dataclass(frozen=True)
class LimitPoint:
    x: Fraction
    y: Fraction
    a4: Fraction
    b3: Fraction


def limit_map(
    b1: Scalar,
    b2: Scalar,
    a1: Scalar,
    a2: Scalar,
    a3: Scalar,
    q: Scalar,
    z: Scalar,
    alpha: Scalar,
    beta: Scalar,
) -> LimitPoint:
    """The parameter substitutions and evaluation points of the limit transition.

    a4 and b3 are the q-power substitutions; x and y are the images of the
    circle variable and of the a-parameters.  x does not depend on q, and y
    depends on neither q nor z.
    """
    b1, b2 = as_rational(b1), as_rational(b2)
    a1, a2, a3 = as_rational(a1), as_rational(a2), as_rational(a3)
    q, z = as_rational(q), as_rational(z)
    alpha, beta = as_rational(alpha), as_rational(beta)
    if 0 in (b1, b2, z):
        raise SingularParameterError("b1, b2 and z must be nonzero")
    a4 = exact_rational_pow(q, alpha + 1) / b1
    b3 = exact_rational_pow(q, beta + 1) / b2
    c = (z + 1 / z) / 2
    den_x = (1 - b1 * b2) * (b2 - b1)
    den_y = (b1 - b2) * (b1 * b2 - 1) * (b1 - a1 * a2 * a3)
    if den_x == 0 or den_y == 0:
        raise SingularParameterError("vanishing denominator in the evaluation points")
    x = 1 - 2 * b2 * (1 - 2 * b1 * c + b1**2) / den_x
    y = 1 - 2 * b2 * (b1 - a1) * (b1 - a2) * (b1 - a3) / den_y
    return LimitPoint(x=x, y=y, a4=a4, b3=b3)


@dataclass(frozen=True)
class LimitSchedule:
    """A q -> 1 path along which every needed q-power stays rational.

    q_t = r_t^D with r_t = 1 - 2^-t; D is a common denominator of alpha+1
    and beta+1 so that q_t^(alpha+1) and q_t^(beta+1) are integer powers
    of r_t.
    """

    alpha: Fraction
    beta: Fraction
    denom_scale: int
    steps: tuple[int, ...] = (3, 4, 5, 6, 7, 8)

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "beta", as_rational(self.beta))
        object.__setattr__(self, "steps", tuple(self.steps))
        if self.denom_scale <= 0:
            raise ValueError("denominator scale must be positive")
        for value in (self.alpha + 1, self.beta + 1):
            if (value * self.denom_scale).denominator != 1:
                raise ValueError(
                    "denom_scale must clear the denominators of alpha+1 and beta+1"
                )
        if len(self.steps) < 3 or any(t <= 0 for t in self.steps) or sorted(
            set(self.steps)
        ) != list(self.steps):
            raise ValueError("steps must be at least three strictly increasing positive ints")

    def q_at(self, t: int) -> tuple[Fraction, Fraction]:
        r = 1 - Fraction(1, 2**t)
        return r, r**self.denom_scale


@dataclass(frozen=True)
class LimitParams:
    """The free parameters of the limit runs."""

    b1: Fraction
    b2: Fraction
    a1: Fraction
    a2: Fraction
    a3: Fraction
    z: Fraction

    def __init__(self, b1, b2, a1, a2, a3, z):
        for name, v in zip(("b1", "b2", "a1", "a2", "a3", "z"), (b1, b2, a1, a2, a3, z)):
            object.__setattr__(self, name, as_rational(v))


DEFAULT_LIMIT_PARAMS = LimitParams(
    b1=Fraction(1, 3),
    b2=Fraction(1, 2),
    a1=Fraction(1, 5),
    a2=Fraction(1, 7),
    a3=Fraction(1, 11),
    z=Fraction(2),
)


def decimal_string(value: Fraction, digits: int = 40) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


@dataclass
class ConvergenceCase:
    case_id: str
    errors: list[Fraction]
    status: str
    final_error: Fraction

    def error_strings(self, digits: int = 40) -> list[str]:
        return [decimal_string(e, digits) for e in self.errors]


@dataclass
class ConvergenceReport:
    suite: str
    steps: tuple[int, ...]
    ratio_bound: Fraction
    tolerance: Fraction
    cases: list[ConvergenceCase] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status == "PASS" for c in self.cases)

    def failures(self) -> list[ConvergenceCase]:
        return [c for c in self.cases if c.status != "PASS"]


def trend_ok(errors: Sequence[Fraction], ratio: Fraction, tol: Fraction) -> bool:
    """Eventually monotone decay with bounded step ratio, ending under tol.

    The last three steps (two consecutive ratios) must satisfy
    err' <= ratio * err, and the final error must be at most tol.  Exactly
    zero tails pass trivially.
    """
    if len(errors) < 3:
        raise ValueError("need at least three schedule steps")
    if errors[-1] > tol:
        return False
    tail = errors[-3:]
    for prev, nxt in zip(tail, tail[1:]):
        if nxt > ratio * prev:
            return False
    return True


def check_q_limits(
    schedule: LimitSchedule,
    params: LimitParams = DEFAULT_LIMIT_PARAMS,
    n_max: int = 3,
    ratio: Fraction = Fraction(3, 4),
    tol: Fraction = Fraction(1, 10000),
    corrupt_targets: bool = False,
) -> ConvergenceReport:
    """Exact error sequences for the three normalized q -> 1 limits.

    For every schedule step the three normalized quantities are evaluated
    exactly and compared with their exact targets: the normalized b-family
    polynomial against the rescaled two-parameter polynomial at x, the
    a-family polynomial against the shifted power, and the normalized
    terminating-series block against the shifted-parameter polynomial at y.
    ``corrupt_targets`` offsets every target by one, a negative control that
    any passing run must reject.
    """
    al, be, d = schedule.alpha, schedule.beta, schedule.denom_scale
    da = int(d * (al + 1))
    db = int(d * (be + 1))
    b1, b2, z = params.b1, params.b2, params.z
    a123 = (params.a1, params.a2, params.a3)
    offset = Fraction(1) if corrupt_targets else Fraction(0)

    c = (z + 1 / z) / 2
    den_x = (1 - b1 * b2) * (b2 - b1)
    den_y = (b1 - b2) * (b1 * b2 - 1) * (b1 - a123[0] * a123[1] * a123[2])
    if den_x == 0 or den_y == 0 or 0 in (b1, b2, z) or 0 in a123:
        raise SingularParameterError("inadmissible limit parameters")
    x = 1 - 2 * b2 * (1 - 2 * b1 * c + b1**2) / den_x
    y = (
        1
        - 2
        * b2
        * (b1 - a123[0])
        * (b1 - a123[1])
        * (b1 - a123[2])
        / den_y
    )

    targets_i = [
        (den_x / (b1 * b2)) ** n * jacobi(n, al, be)(x) + offset
        for n in range(n_max + 1)
    ]
    shift_base = (
        (1 - a123[0] * a123[1]) * (1 - a123[0] * a123[2]) * (b1 - a123[0])
        - (b1 - a123[0] * a123[1] * a123[2]) * (1 - 2 * a123[0] * c + a123[0] ** 2)
    ) / (a123[0] * b1)
    targets_ii = [shift_base**k + offset for k in range(n_max + 1)]
    targets_iii = {
        (n, k): jacobi(n - k, al + k, be + k)(y) + offset
        for n in range(n_max + 1)
        for k in range(n + 1)
    }

    errors_i: dict[int, list[Fraction]] = {n: [] for n in range(n_max + 1)}
    errors_ii: dict[int, list[Fraction]] = {k: [] for k in range(n_max + 1)}
    errors_iii: dict[tuple[int, int], list[Fraction]] = {
        key: [] for key in targets_iii
    }

    for t in schedule.steps:
        r, q = schedule.q_at(t)
        qa1 = r**da  # q^(alpha+1)
        qb1 = r**db  # q^(beta+1)
        a4 = qa1 / b1
        b3 = qb1 / b2
        for n in range(n_max + 1):
            lhs = aw_value(n, (b1, b2, b3, a4), q, z) / q_pochhammer(q, q, n)
            errors_i[n].append(abs(lhs - targets_i[n]))
            lhs = aw_value(n, (*a123, a4), q, z)
            errors_ii[n].append(abs(lhs - targets_ii[n]))
        for (n, k), target in targets_iii.items():
            qak1 = qa1 * q**k  # q^(alpha+k+1)
            upper = (
                q ** (k - n),
                qa1 * qb1 * q ** (n + k - 1),
                qak1 * a123[0] / b1,
                qak1 * a123[1] / b1,
                qak1 * a123[2] / b1,
            )
            lower = (
                qak1,
                qak1 * b2 / b1,
                qa1 * qb1 * q**k / (b1 * b2),
                qa1 * q ** (2 * k) * a123[0] * a123[1] * a123[2] / b1,
            )
            block = q_pochhammer(qak1, q, n - k) / q_pochhammer(q, q, n - k)
            block *= _terminating_phi(upper, lower, q, q, n - k + 1)
            errors_iii[(n, k)].append(abs(block - target))

    report = ConvergenceReport(
        suite="q-limits",
        steps=schedule.steps,
        ratio_bound=ratio,
        tolerance=tol,
    )
    for n, seq in errors_i.items():
        status = "PASS" if trend_ok(seq, ratio, tol) else "FAIL"
        report.cases.append(ConvergenceCase(f"normalized polynomial, n={n}", seq, status, seq[-1]))
    for k, seq in errors_ii.items():
        status = "PASS" if trend_ok(seq, ratio, tol) else "FAIL"
        report.cases.append(ConvergenceCase(f"shifted power, k={k}", seq, status, seq[-1]))
    for (n, k), seq in errors_iii.items():
        status = "PASS" if trend_ok(seq, ratio, tol) else "FAIL"
        report.cases.append(
            ConvergenceCase(f"series block, n={n}, k={k}", seq, status, seq[-1])
        )
    return report


# --- the exact limit identities ---------------------------------------------


def verify_limit_identities(
    alpha: Scalar, beta: Scalar, y: Scalar, n_max: int, window: int | None = None
) -> VerificationReport:
    """The two limit expansions as exact polynomial identities, plus the
    inverse-pair consequences."""
    alpha, beta, y = as_rational(alpha), as_rational(beta), as_rational(y)
    window = window if window is not None else n_max
    report = VerificationReport(suite="limit-identities")
    params = {"alpha": alpha, "beta": beta, "y": y}
    s = alpha + beta
    for k in range(n_max + 1):
        if s + k + 1 == 0 or pochhammer(s + k + 2, n_max) == 0:
            raise SingularParameterError(
                f"vanishing denominator at k={k} for (alpha, beta)=({alpha}, {beta})"
            )

    half_shift = Poly((-y / 2, Fraction(1, 2)))  # (x - y)/2
    for n in range(n_max + 1):
        rhs = Poly()
        for k in range(n + 1):
            rhs = rhs + half_shift**k * (
                pochhammer(n + s + 1, k)
                / factorial(k)
                * jacobi(n - k, alpha + k, beta + k)(y)
            )
        lhs = jacobi(n, alpha, beta)
        if not report.check(
            f"polynomial expansion, n={n}",
            lhs == rhs,
            params,
            poly_counterexample(n, lhs, rhs),
        ):
            return report

        rhs = Poly()
        for k in range(n + 1):
            rhs = rhs + jacobi(k, alpha, beta) * (
                (s + 2 * k + 1)
                / (s + k + 1)
                * factorial(n)
                / pochhammer(s + k + 2, n)
                * jacobi(n - k, -alpha - n - 1, -beta - n - 1)(y)
            )
        lhs = half_shift**n
        if not report.check(
            f"shifted-power expansion, n={n}",
            lhs == rhs,
            params,
            poly_counterexample(n, lhs, rhs),
        ):
            return report

        # scalar inverse relations at the evaluation point
        lhs_scalar = sum(
            pochhammer(s + n + 1, k)
            / pochhammer(s + 2, k)
            * jacobi(n - k, alpha + k, beta + k)(y)
            * jacobi(k, -alpha - k - 1, -beta - k - 1)(y)
            for k in range(n + 1)
        )
        want = Fraction(1) if n == 0 else Fraction(0)
        if not report.check(
            f"row orthogonality, n={n}",
            lhs_scalar == want,
            params,
            rational_counterexample(n, lhs_scalar, want),
        ):
            return report
        lhs_scalar = sum(
            (s + 2 * k + 1)
            / (s + 1)
            * pochhammer(s + 1, k)
            / pochhammer(s + n + 2, k)
            * jacobi(k, alpha, beta)(y)
            * jacobi(n - k, -alpha - n - 1, -beta - n - 1)(y)
            for k in range(n + 1)
        )
        if not report.check(
            f"column orthogonality, n={n}",
            lhs_scalar == want,
            params,
            rational_counterexample(n, lhs_scalar, want),
        ):
            return report

    point = ParameterPoint(alpha, beta)
    a = build_A36(point, y, window)
    b = build_B36(point, y, window)
    report.check("A*B = I", is_identity(tri_mul(a, b)), params)
    report.check("B*A = I", is_identity(tri_mul(b, a)), params)
    return report
