"""Windowed lower triangular matrices over Poly and the inverse-pair families.

A TriWindow is a finite index block [n0, n0+N-1]^2 of a doubly infinite lower
triangular matrix.  Because everything above the diagonal vanishes, the
product of two windows needs no indices outside the block: windowed products
are exact, not truncations.  That structural fact is what lets a finite
computation certify identities stated for the doubly infinite group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator, Mapping, Sequence

from .jacobi import ParameterPoint, gegenbauer, jacobi
from .poly import Poly, Scalar, as_rational, pochhammer
from .reporting import VerificationReport, poly_counterexample

DELTA = {True: Poly.constant(1), False: Poly()}


class SingularParameterError(ArithmeticError):
    """A window builder hit a vanishing denominator; reject the sample."""


@dataclass(frozen=True)
class TriWindow:
    """Lower triangular block with absolute indices m, n in [n0, n0+N-1]."""

    base_index: int
    size: int
    rows: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        if self.size <= 0:
            raise ValueError("window size must be positive")
        if len(self.rows) != self.size or any(
            len(row) != i + 1 for i, row in enumerate(self.rows)
        ):
            raise ValueError("rows must form a lower triangular block")

    @property
    def top_index(self) -> int:
        return self.base_index + self.size - 1

    @property
    def unitriangular(self) -> bool:
        one = Poly.constant(1)
        return all(row[i] == one for i, row in enumerate(self.rows))

    def indices(self) -> Iterator[tuple[int, int]]:
        for i in range(self.size):
            for j in range(i + 1):
                yield self.base_index + i, self.base_index + j

    def entry(self, m: int, n: int) -> Poly:
        i, j = m - self.base_index, n - self.base_index
        if not (0 <= i < self.size and 0 <= j < self.size):
            raise IndexError(f"({m}, {n}) outside window")
        if j > i:
            return Poly()
        return self.rows[i][j]

    def same_window(self, other: TriWindow) -> bool:
        return self.base_index == other.base_index and self.size == other.size

    def is_toeplitz(self) -> bool:
        return all(
            self.entry(m, n) == self.rows[m - n][0]
            for m, n in self.indices()
        )


def window_from_entries(
    n0: int, size: int, entry_fn: Callable[[int, int], Poly]
) -> TriWindow:
    rows = tuple(
        tuple(entry_fn(n0 + i, n0 + j) for j in range(i + 1)) for i in range(size)
    )
    return TriWindow(n0, size, rows)


def toeplitz_window(n0: int, size: int, offset_fn: Callable[[int], Poly]) -> TriWindow:
    values = [offset_fn(d) for d in range(size)]
    return window_from_entries(n0, size, lambda m, n: values[m - n])


def identity_window(n0: int, size: int) -> TriWindow:
    return toeplitz_window(n0, size, lambda d: DELTA[d == 0])


def tri_mul(a: TriWindow, b: TriWindow) -> TriWindow:
    """Exact product; the sum over k stays inside the window."""
    if not a.same_window(b):
        raise ValueError("window mismatch")

    def entry(m: int, n: int) -> Poly:
        acc = Poly()
        for k in range(n, m + 1):
            left, right = a.entry(m, k), b.entry(k, n)
            if not (left.is_zero or right.is_zero):
                acc = acc + left * right
        return acc

    return window_from_entries(a.base_index, a.size, entry)


def tri_add(a: TriWindow, b: TriWindow) -> TriWindow:
    if not a.same_window(b):
        raise ValueError("window mismatch")
    return window_from_entries(
        a.base_index, a.size, lambda m, n: a.entry(m, n) + b.entry(m, n)
    )


def tri_scale(a: TriWindow, c: Scalar) -> TriWindow:
    c = as_rational(c)
    return window_from_entries(a.base_index, a.size, lambda m, n: a.entry(m, n) * c)


def tri_inverse(a: TriWindow) -> TriWindow:
    """Inverse by forward substitution; requires a unitriangular window."""
    if not a.unitriangular:
        raise ValueError("inverse is implemented for unitriangular windows only")
    n0, size = a.base_index, a.size
    inv_rows: list[list[Poly]] = []
    for i in range(size):
        row = []
        for j in range(i + 1):
            if i == j:
                row.append(Poly.constant(1))
                continue
            acc = Poly()
            for k in range(j, i):
                term = a.entry(n0 + i, n0 + k) * inv_rows[k][j]
                acc = acc + term
            row.append(-acc)
        inv_rows.append(row)
    return TriWindow(n0, size, tuple(tuple(r) for r in inv_rows))


def is_identity(a: TriWindow) -> bool:
    return all(a.entry(m, n) == DELTA[m == n] for m, n in a.indices())


# --- the Theorem-18 pair ---------------------------------------------------


def build_L(p: ParameterPoint, n0: int, size: int) -> TriWindow:
    """L: entries P_{m-n} with parameters shifted by the column index."""
    al, be = p.alpha, p.beta
    return window_from_entries(
        n0, size, lambda m, n: jacobi(m - n, al + n, be + n)
    )


def m_entry(m: int, n: int, alpha: Fraction, beta: Fraction) -> Poly:
    """Entry (m, n) of the inverse matrix M.

    Uses the two-Jacobi form with denominator n+alpha when that is nonzero
    and otherwise the expanded form in powers of (x-1)/2, which extends the
    same rational function across the apparent singularity.
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    if m == n:
        return Poly.constant(1)
    if m < n:
        return Poly()
    if n + alpha != 0:
        return (
            jacobi(m - n, -alpha - m, -beta - m) * ((m + beta) / (n + alpha))
            + jacobi(m - n, -alpha - m, -beta - m - 1) * ((alpha - beta) / (n + alpha))
        )
    return _m_entry_expanded(m, n, alpha, beta)


def _m_entry_expanded(m: int, n: int, alpha: Fraction, beta: Fraction) -> Poly:
    base = Poly((Fraction(-1, 2), Fraction(1, 2)))  # (x-1)/2
    acc = Poly()
    base_pow = Poly.constant(1)
    for k in range(m - n):
        c = (m + beta) * pochhammer(-alpha - beta - m - n + 1, k) + (
            alpha - beta
        ) * pochhammer(-alpha - beta - m - n, k)
        c *= pochhammer(-alpha - m + k + 1, m - n - k - 1)
        c /= factorial(k) * factorial(m - n - k)
        acc = acc - base_pow * c
        base_pow = base_pow * base
    top = (
        (alpha + beta + 2 * m)
        * pochhammer(-alpha - beta - m - n + 1, m - n - 1)
        / factorial(m - n)
    )
    return acc - base_pow * top


def build_M(p: ParameterPoint, n0: int, size: int) -> TriWindow:
    al, be = p.alpha, p.beta
    return window_from_entries(n0, size, lambda m, n: m_entry(m, n, al, be))


# --- the Toeplitz families -------------------------------------------------


def build_P(p: ParameterPoint, n0: int, size: int) -> TriWindow:
    al, be = p.alpha, p.beta
    return toeplitz_window(n0, size, lambda d: jacobi(d, al, be))


def build_Q(p: ParameterPoint, n0: int, size: int) -> TriWindow:
    al, be = p.alpha, p.beta
    return toeplitz_window(n0, size, lambda d: jacobi(d, al - d, be - d))


# --- the shifted-monomial connection pair ----------------------------------


def build_A36(p: ParameterPoint, y: Scalar, size: int) -> TriWindow:
    """Connection matrix from shifted monomials into the Jacobi family.

    Entries are rational constants (y is an evaluation point); indices run
    over the nonnegative integers.
    """
    al, be, y = p.alpha, p.beta, as_rational(y)

    def entry(m: int, n: int) -> Poly:
        value = (
            pochhammer(al + be + m + 1, n)
            / factorial(n)
            * jacobi(m - n, al + n, be + n)(y)
        )
        return Poly.constant(value)

    return window_from_entries(0, size, entry)


def build_B36(p: ParameterPoint, y: Scalar, size: int) -> TriWindow:
    al, be, y = p.alpha, p.beta, as_rational(y)
    for n in range(size):
        if al + be + n + 1 == 0 or pochhammer(al + be + n + 2, size - 1) == 0:
            raise SingularParameterError(
                f"vanishing denominator at n={n} for (alpha, beta)=({al}, {be})"
            )

    def entry(m: int, n: int) -> Poly:
        value = (
            (al + be + 2 * n + 1)
            / (al + be + n + 1)
            * factorial(m)
            / pochhammer(al + be + n + 2, m)
            * jacobi(m - n, -al - m - 1, -be - m - 1)(y)
        )
        return Poly.constant(value)

    return window_from_entries(0, size, entry)


# --- the scalar convolution identities --------------------------------------

IDENTITY_PARAMS: dict[str, tuple[str, ...]] = {
    "EQ12": ("alpha1", "beta1", "alpha2", "beta2"),
    "EQ14": ("alpha1", "beta1", "alpha2", "beta2"),
    "EQ40": ("alpha", "beta"),
    "EQ41": ("alpha", "beta"),
    "EQ42": ("alpha", "beta"),
    "EQ5": ("alpha",),
    "EQ33": ("alpha", "beta"),
    "EQ45": ("alpha1", "beta1", "alpha2", "beta2"),
    "EQ30": ("alpha",),
    "EQ31": ("alpha", "beta"),
    "EQ32": ("alpha", "beta"),
    "EQ34": ("mu", "nu"),
    "EQ43": ("nu",),
    "EQ44": ("nu", "lam"),
}


@dataclass(frozen=True)
class IdentitySpec:
    """A named convolution identity plus the exact parameters to check it at."""

    identity_id: str
    parameters: Mapping[str, Fraction]
    n_max: int

    def __post_init__(self):
        if self.identity_id not in IDENTITY_PARAMS:
            raise ValueError(f"unknown identity {self.identity_id!r}")
        expected = set(IDENTITY_PARAMS[self.identity_id])
        got = set(self.parameters)
        if expected != got:
            raise ValueError(
                f"{self.identity_id} takes parameters {sorted(expected)}, got {sorted(got)}"
            )
        if self.n_max <= 0:
            raise ValueError("n_max must be positive")

    def param(self, name: str) -> Fraction:
        return as_rational(self.parameters[name])


def identity_admissible(identity_id: str, params: Mapping[str, Fraction], n_max: int) -> bool:
    """True when no denominator of the identity vanishes for the n-range."""
    p = {k: as_rational(v) for k, v in params.items()}
    if identity_id == "EQ14":
        s = p["alpha1"] + p["alpha2"] + p["beta1"] + p["beta2"]
        return all(s + 2 * n != 0 for n in range(1, n_max + 1))
    if identity_id in ("EQ42",):
        return p["alpha"] != 0
    if identity_id == "EQ5":
        return p["alpha"] != 0
    if identity_id == "EQ33":
        # rows n in [-3, 3] are exercised; each needs n + alpha != 0
        return all(n + p["alpha"] != 0 for n in range(-3, 4))
    if identity_id == "EQ30":
        return pochhammer(2 * p["alpha"] + 2, n_max) != 0
    if identity_id == "EQ31":
        return pochhammer(p["alpha"] + p["beta"] + 2, n_max) != 0
    if identity_id == "EQ32":
        s = p["alpha"] + p["beta"]
        return s + 1 != 0 and all(
            pochhammer(s + n + 2, n) != 0 for n in range(1, n_max + 1)
        )
    if identity_id == "EQ34":
        return p["nu"] != 0 and all(
            p["mu"] * k + p["nu"] != 0 for k in range(n_max + 1)
        )
    return True


def _convolution_sides(spec: IdentitySpec) -> Iterator[tuple[object, Poly, Poly]]:
    """Yield (index, lhs, rhs) for every instance of the named identity."""
    sid = spec.identity_id
    g = spec.param

    if sid in ("EQ12", "EQ14"):
        a1, b1, a2, b2 = g("alpha1"), g("beta1"), g("alpha2"), g("beta2")
        start = 1 if sid == "EQ14" else 0
        for n in range(start, spec.n_max + 1):
            if sid == "EQ12":
                lhs = _sum_poly(
                    jacobi(n - k, a1 + k, b1 + k) * jacobi(k, a2 - k, b2 - k)
                    for k in range(n + 1)
                )
                yield n, lhs, jacobi(n, a1 + a2, b1 + b2)
            else:
                lhs = _sum_poly(
                    jacobi(n - k, a1 + k, b1 + k) * jacobi(k, a2 - k, b2 - k) * k
                    for k in range(n + 1)
                )
                den = a1 + a2 + b1 + b2 + 2 * n
                rhs = jacobi(n, a1 + a2, b1 + b2) * (n * (a2 + b2) / den) + jacobi(
                    n - 1, a1 + a2, b1 + b2
                ) * ((a2 * b1 - a1 * b2 + n * (a2 - b2)) / den)
                yield n, lhs, rhs
    elif sid in ("EQ40", "EQ41"):
        al, be = g("alpha"), g("beta")
        start = 1 if sid == "EQ41" else 0
        for n in range(start, spec.n_max + 1):
            terms = [
                jacobi(n - k, al + k, be + k) * jacobi(k, -al - k, -be - k)
                for k in range(n + 1)
            ]
            if sid == "EQ40":
                yield n, _sum_poly(terms), jacobi(n, Fraction(0), Fraction(0))
            else:
                lhs = _sum_poly(t * k for k, t in enumerate(terms))
                rhs = jacobi(n, Fraction(0), Fraction(0)) * (-(al + be) / 2) + jacobi(
                    n - 1, Fraction(0), Fraction(0)
                ) * ((be - al) / 2)
                yield n, lhs, rhs
    elif sid == "EQ42":
        al, be = g("alpha"), g("beta")
        for n in range(spec.n_max + 1):
            lhs = _sum_poly(
                jacobi(n - k, al + k, be + k)
                * (
                    jacobi(k, -al - k, -be - k) * ((k + be) / al)
                    + jacobi(k, -al - k, -be - k - 1) * ((al - be) / al)
                )
                for k in range(n + 1)
            )
            yield n, lhs, DELTA[n == 0]
    elif sid == "EQ5":
        al = g("alpha")
        for n in range(spec.n_max + 1):
            lhs = _sum_poly(
                jacobi(n - k, al + k, al + k)
                * jacobi(k, -al - k, -al - k)
                * ((k + al) / al)
                for k in range(n + 1)
            )
            yield n, lhs, DELTA[n == 0]
    elif sid == "EQ33":
        al, be = g("alpha"), g("beta")
        for n in range(-3, 4):
            for m in range(n, n + spec.n_max + 1):
                lhs = _sum_poly(
                    jacobi(m - k, al + k, be + k)
                    * (
                        jacobi(k - n, -al - k, -be - k) * ((k + be) / (n + al))
                        + jacobi(k - n, -al - k, -be - k - 1) * ((al - be) / (n + al))
                    )
                    for k in range(n, m + 1)
                )
                yield (m, n), lhs, DELTA[m == n]
    elif sid == "EQ45":
        a1, b1, a2, b2 = g("alpha1"), g("beta1"), g("alpha2"), g("beta2")
        zero = Fraction(0)
        for n in range(spec.n_max + 1):
            lhs = _sum_poly(
                jacobi(n - k, a1, b1) * jacobi(k, a2, b2) for k in range(n + 1)
            )
            rhs = _sum_poly(
                jacobi(n - k, zero, zero) * jacobi(k, a1 + a2, b1 + b2)
                for k in range(n + 1)
            )
            yield n, lhs, rhs
    elif sid == "EQ30":
        al = g("alpha")
        for n in range(spec.n_max + 1):
            lhs = _sum_poly(
                jacobi(n - k, al + k, al + k)
                * jacobi(k, -al - k - 1, -al - k - 1)
                * (pochhammer(n + 2 * al + 1, k) / pochhammer(2 * al + 2, k))
                for k in range(n + 1)
            )
            yield n, lhs, DELTA[n == 0]
    elif sid == "EQ31":
        al, be = g("alpha"), g("beta")
        for n in range(spec.n_max + 1):
            lhs = _sum_poly(
                jacobi(n - k, al + k, be + k)
                * jacobi(k, -al - k - 1, -be - k - 1)
                * (pochhammer(al + be + n + 1, k) / pochhammer(al + be + 2, k))
                for k in range(n + 1)
            )
            yield n, lhs, DELTA[n == 0]
    elif sid == "EQ32":
        al, be = g("alpha"), g("beta")
        s = al + be
        for n in range(spec.n_max + 1):
            lhs = _sum_poly(
                jacobi(k, al, be)
                * jacobi(n - k, -al - n - 1, -be - n - 1)
                * ((s + 2 * k + 1) / (s + 1))
                * (pochhammer(s + 1, k) / pochhammer(s + n + 2, k))
                for k in range(n + 1)
            )
            yield n, lhs, DELTA[n == 0]
    elif sid == "EQ34":
        mu, nu = g("mu"), g("nu")
        for n in range(spec.n_max + 1):
            lhs = _sum_poly(
                gegenbauer(k, mu * k + nu)
                * gegenbauer(n - k, -mu * k - nu)
                * (nu / (mu * k + nu))
                for k in range(n + 1)
            )
            yield n, lhs, DELTA[n == 0]
    elif sid == "EQ43":
        nu = g("nu")
        for n in range(spec.n_max + 1):
            lhs = _sum_poly(
                gegenbauer(k, nu) * gegenbauer(n - k, -nu) for k in range(n + 1)
            )
            yield n, lhs, DELTA[n == 0]
    elif sid == "EQ44":
        nu, lam = g("nu"), g("lam")
        for n in range(spec.n_max + 1):
            lhs = _sum_poly(
                gegenbauer(k, nu) * gegenbauer(n - k, lam) for k in range(n + 1)
            )
            yield n, lhs, gegenbauer(n, nu + lam)
    else:  # pragma: no cover - guarded by IdentitySpec validation
        raise ValueError(f"unknown identity {sid!r}")


def _sum_poly(terms) -> Poly:
    acc = Poly()
    for t in terms:
        acc = acc + t
    return acc


def run_convolution_suite(spec: IdentitySpec) -> VerificationReport:
    """Check every instance of the identity; report the smallest failing index."""
    report = VerificationReport(suite=spec.identity_id)
    if not identity_admissible(spec.identity_id, spec.parameters, spec.n_max):
        raise SingularParameterError(
            f"inadmissible parameters for {spec.identity_id}: {dict(spec.parameters)}"
        )
    for index, lhs, rhs in _convolution_sides(spec):
        if lhs != rhs:
            report.add_fail(
                spec.identity_id,
                spec.parameters,
                poly_counterexample(index, lhs, rhs),
            )
            return report
    report.add_pass(spec.identity_id, spec.parameters)
    return report
