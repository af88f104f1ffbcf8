"""Truncated formal power series with exact coefficients.

Two flavours share the same conventions:

* ``Series`` -- a series in x with rational coefficients.
* ``PolySeries`` -- a series in t whose coefficients are ``Poly`` values
  (polynomials in x), used for exponential generating function work.

A series carries an explicit truncation order N: exactly N + 1 coefficients
are stored and arithmetic never pretends to know anything past x^N.  Binary
operations truncate to the smaller of the two orders.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable

from .polynomial import Poly, _as_fraction


class Series:
    """Truncated series in one variable over the rationals."""

    __slots__ = ("coeffs", "order")

    coeffs: tuple[Fraction, ...]
    order: int

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = tuple(_as_fraction(c) for c in coeffs)
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        if len(cs) != order + 1:
            raise ValueError(f"need {order + 1} coefficients, got {len(cs)}")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> Series:
        return cls(tuple(p.coefficient(i) for i in range(order + 1)), order)

    def coefficient(self, i: int) -> Fraction:
        if not 0 <= i <= self.order:
            raise IndexError(f"coefficient {i} beyond truncation order {self.order}")
        return self.coeffs[i]

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[: order + 1], order)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other: Series) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)), n)

    def __neg__(self) -> Series:
        return Series(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other: Series) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> Series:
        if isinstance(other, (int, Fraction)):
            return Series(tuple(c * other for c in self.coeffs), self.order)
        if isinstance(other, Poly):
            out = [Fraction(0)] * (self.order + 1)
            for i, a in enumerate(other.coeffs):
                if a == 0:
                    continue
                for n in range(i, self.order + 1):
                    out[n] += a * self.coeffs[n - i]
            return Series(out, self.order)
        if isinstance(other, Series):
            n = min(self.order, other.order)
            out = [Fraction(0)] * (n + 1)
            for i in range(n + 1):
                a = self.coeffs[i]
                if a == 0:
                    continue
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
            return Series(out, n)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Series({[str(c) for c in self.coeffs]}, order={self.order})"


def expand_quotient(p: Poly, d: int, order: int) -> Series:
    """Truncated expansion of p(x) / (1 - x)^d through x^order.

    Convolves p with the binomial coefficients C(k + d - 1, d - 1) of the
    expansion of (1 - x)^(-d).
    """
    if d < 1:
        raise ValueError("denominator power must be >= 1")
    if order < p.degree:
        raise ValueError("truncation order must reach the numerator degree")
    out = [Fraction(0)] * (order + 1)
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        for n in range(i, order + 1):
            out[n] += c * comb(n - i + d - 1, d - 1)
    return Series(out, order)


class PolySeries:
    """Truncated series in t whose coefficients are polynomials in x."""

    __slots__ = ("coeffs", "order")

    coeffs: tuple[Poly, ...]
    order: int

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = tuple(c if isinstance(c, Poly) else Poly((c,)) for c in coeffs)
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        if len(cs) != order + 1:
            raise ValueError(f"need {order + 1} coefficients, got {len(cs)}")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("PolySeries is immutable")

    @classmethod
    def constant(cls, value, order: int) -> PolySeries:
        head = value if isinstance(value, Poly) else Poly((value,))
        return cls((head,) + (Poly(),) * order, order)

    def coefficient(self, i: int) -> Poly:
        if not 0 <= i <= self.order:
            raise IndexError(f"coefficient {i} beyond truncation order {self.order}")
        return self.coeffs[i]

    def truncate(self, order: int) -> PolySeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return PolySeries(self.coeffs[: order + 1], order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other: PolySeries) -> PolySeries:
        if not isinstance(other, PolySeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PolySeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)), n)

    def __neg__(self) -> PolySeries:
        return PolySeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other: PolySeries) -> PolySeries:
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> PolySeries:
        if isinstance(other, (int, Fraction, Poly)):
            return PolySeries(tuple(c * other for c in self.coeffs), self.order)
        if isinstance(other, PolySeries):
            n = min(self.order, other.order)
            out = [Poly() for _ in range(n + 1)]
            for i in range(n + 1):
                a = self.coeffs[i]
                if a.is_zero:
                    continue
                for j in range(n + 1 - i):
                    out[i + j] = out[i + j] + a * other.coeffs[j]
            return PolySeries(out, n)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"PolySeries({[str(c) for c in self.coeffs]}, order={self.order})"


def series_t_divide(num: PolySeries, den: PolySeries) -> PolySeries:
    """Exact truncated quotient num/den of series in t.

    The t^0 coefficient of the denominator must be a nonzero constant; a
    denominator with a removable zero or a polynomial unit at t^0 (such as
    e^t - 1 or the generating kernels with a 1 - x front factor) has to be
    rearranged by the caller first, e.g. by cancelling the offending factor
    against the numerator.
    """
    lead = den.coeffs[0]
    if lead.degree > 0 or lead.is_zero:
        raise ValueError(
            "denominator t^0 coefficient must be a nonzero constant; "
            "rearrange the quotient before dividing"
        )
    inv = Fraction(1) / lead.coefficient(0)
    n = min(num.order, den.order)
    out: list[Poly] = []
    for k in range(n + 1):
        acc = num.coeffs[k]
        for j in range(1, k + 1):
            acc = acc - den.coeffs[j] * out[k - j]
        out.append(acc * inv)
    return PolySeries(out, n)


def exp_series(scale, order: int) -> PolySeries:
    """Exponential series exp(a*t) truncated in t: coefficient n is a^n / n!.

    ``scale`` may be a rational or a polynomial in x, so this covers
    exp(x*t), exp(2t) and exp(t*(1-x)) alike.
    """
    a = scale if isinstance(scale, Poly) else Poly((scale,))
    coeffs = []
    power = Poly.one()
    for n in range(order + 1):
        coeffs.append(power / factorial(n))
        power = power * a
    return PolySeries(coeffs, order)
