"""Exact scalars and dense univariate polynomials.

Scalars are ``fractions.Fraction`` everywhere: arbitrary precision, always in
lowest terms with positive denominator, and no rounding at any point.
Polynomials are dense coefficient vectors over that field, in the single
variable x.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Union

Rational = Fraction

Scalar = Union[int, Fraction]

NEG_INF = float("-inf")  # degree of the zero polynomial, never an int


def as_rational(value: Scalar | str) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def is_integer(r: Scalar) -> bool:
    return as_rational(r).denominator == 1


def pochhammer(a: Scalar, k: int) -> Fraction:
    """Shifted factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1."""
    if k < 0:
        raise ValueError("pochhammer length must be nonnegative")
    a = as_rational(a)
    out = Fraction(1)
    for j in range(k):
        out *= a + j
    return out


def binomial(e: Scalar, k: int) -> Fraction:
    """Generalized binomial coefficient C(e, k) for rational e, integer k >= 0."""
    if k < 0:
        raise ValueError("binomial index must be nonnegative")
    return (-1) ** k * pochhammer(-as_rational(e), k) / factorial(k)


class Poly:
    """Dense polynomial in x over Fraction.

    The stored coefficient vector never has a trailing zero; the zero
    polynomial stores an empty vector and reports degree ``NEG_INF``.
    Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def constant(c: Scalar) -> Poly:
        return Poly((c,))

    @staticmethod
    def monomial(c: Scalar, power: int) -> Poly:
        return Poly((0,) * power + (c,))

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __add__(self, other: Poly | Scalar) -> Poly:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly | Scalar) -> Poly:
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> Poly:
        return _coerce(other) - self

    def __mul__(self, other: Poly | Scalar) -> Poly:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly(tuple(c * other for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, x0: Scalar) -> Fraction:
        # Horner, exact
        x0 = as_rational(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def derivative(self, order: int = 1) -> Poly:
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        cs = self.coeffs
        for _ in range(order):
            if len(cs) <= 1:
                return Poly()
            cs = tuple(cs[i] * i for i in range(1, len(cs)))
        return Poly(cs)

    def reflected(self) -> Poly:
        """The polynomial x -> p(-x)."""
        return Poly(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    def root_multiplicity(self, x0: Scalar) -> int:
        """Multiplicity of x0 as a root; undefined for the zero polynomial."""
        if self.is_zero:
            raise ValueError("every point is a root of the zero polynomial")
        x0 = as_rational(x0)
        mult = 0
        p = self
        while p(x0) == 0:
            p = _divide_linear(p, x0)
            mult += 1
        return mult

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(v: Poly | Scalar) -> Poly:
    if isinstance(v, Poly):
        return v
    return Poly.constant(v)


def _divide_linear(p: Poly, x0: Fraction) -> Poly:
    # synthetic division by (x - x0); caller guarantees p(x0) == 0
    out = []
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x0 + c
        out.append(acc)
    assert out[-1] == 0
    return Poly(tuple(reversed(out[:-1])))


X = Poly((0, 1))
ONE = Poly((1,))
ZERO = Poly()
