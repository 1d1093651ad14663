"""Truncated formal power series in w over polynomial coefficients.

Every series carries a fixed truncation order W and stores the coefficients
of w^0 .. w^W; all arithmetic truncates there, so the identities checked
through this module are exact statements about the retained coefficients.
Fractional powers use the binomial series, which stays inside the rationals
because C(e, k) is rational for rational e.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .poly import Poly, Scalar, as_rational, binomial


class Series:
    """Formal power series in w, truncated at a fixed order, Poly coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Poly | Scalar] = ()):
        if order < 0:
            raise ValueError("series order must be nonnegative")
        cs = [c if isinstance(c, Poly) else Poly.constant(c) for c in coeffs]
        del cs[order + 1 :]  # quotient-ring semantics: w^{W+1} and beyond vanish
        cs.extend([Poly()] * (order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @staticmethod
    def one(order: int) -> Series:
        return Series(order, (Poly.constant(1),))

    def coefficient(self, n: int) -> Poly:
        return self.coeffs[n]

    def _check_order(self, other: Series) -> None:
        if self.order != other.order:
            raise ValueError(
                f"series order mismatch: {self.order} != {other.order}"
            )

    def __add__(self, other: Series) -> Series:
        self._check_order(other)
        return Series(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Series) -> Series:
        self._check_order(other)
        return Series(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: Series | Poly | Scalar) -> Series:
        if not isinstance(other, Series):
            factor = other if isinstance(other, Poly) else Poly.constant(other)
            return Series(self.order, tuple(c * factor for c in self.coeffs))
        self._check_order(other)
        out = [Poly() for _ in range(self.order + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return Series(self.order, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"Series(order={self.order}, coeffs={list(self.coeffs)!r})"

    def recip(self) -> Series:
        """Multiplicative inverse up to the truncation order.

        Defined only when the w^0 coefficient is a nonzero constant, the
        invertible elements of the coefficient ring.
        """
        c0 = self.coeffs[0]
        if not c0.is_constant or c0.is_zero:
            raise ValueError("reciprocal needs a nonzero constant w^0 coefficient")
        lead = c0.coefficient(0)
        out = [Poly() for _ in range(self.order + 1)]
        out[0] = Poly.constant(1 / lead)
        for m in range(1, self.order + 1):
            acc = Poly()
            for k in range(1, m + 1):
                if not self.coeffs[k].is_zero:
                    acc = acc + self.coeffs[k] * out[m - k]
            out[m] = acc * (Fraction(-1) / lead)
        return Series(self.order, out)

    def pow(self, e: Scalar) -> Series:
        """Binomial power (1 + u)^e with u = self - 1 and rational exponent e.

        Requires the w^0 coefficient to be exactly 1 so the expansion
        sum_k C(e, k) u^k stays rational; u has no w^0 term, so the sum
        terminates at the truncation order.
        """
        e = as_rational(e)
        if self.coeffs[0] != Poly.constant(1):
            raise ValueError("rational powers need a w^0 coefficient equal to 1")
        u = Series(self.order, (Poly(),) + self.coeffs[1:])
        result = Series.one(self.order)
        u_power = Series.one(self.order)
        for k in range(1, self.order + 1):
            u_power = u_power * u
            result = result + u_power * binomial(e, k)
        return result


def distance_kernel(order: int) -> Series:
    """The quadratic 1 - 2xw + w^2 underlying both generating functions."""
    return Series(order, (Poly.constant(1), Poly((0, -2)), Poly.constant(1)))


def jacobi_generating(alpha: Scalar, beta: Scalar, order: int) -> Series:
    """Generating series of the two-parameter Jacobi family.

    Computed as R^{-1} ((1-w+R)/2)^{-alpha} ((1+w+R)/2)^{-beta} with
    R = (1-2xw+w^2)^{1/2}; dividing the two binomial factors by their
    constant term 2 absorbs the usual 2^{alpha+beta} prefactor, so the
    whole computation stays in exact rationals.
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    base = distance_kernel(order)
    r = base.pow(Fraction(1, 2))
    w = Series(order, (Poly(), Poly.constant(1)))
    half = Fraction(1, 2)
    first = (r - w + Series.one(order)) * half
    second = (r + w + Series.one(order)) * half
    return base.pow(Fraction(-1, 2)) * first.pow(-alpha) * second.pow(-beta)


def gegenbauer_generating(lam: Scalar, order: int) -> Series:
    """(1 - 2xw + w^2)^{-lambda}, truncated."""
    return distance_kernel(order).pow(-as_rational(lam))
