"""Exact scalars: Gaussian rationals, sqrt(pi)-scaled values and radial Gaussian moments.

Rationals are plain :class:`fractions.Fraction` (always reduced, positive
denominator).  A :class:`GaussianRational` is a pair of them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "Fraction",
    "GaussianRational",
    "SqrtPiScaled",
    "as_gaussian",
    "binomial",
    "factorial",
    "moment_ratio",
    "radial_moment",
    "ZERO",
    "ONE",
    "I",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to an exact rational")


class GaussianRational:
    """Exact complex number ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> GaussianRational:
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational._raw(self.re + other, self.im)
            return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational._raw(self.re - other, self.im)
            return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational._raw(self.re * other, self.im * other)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._raw(a * c, b)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational._raw(self.re / other, self.im / other)
            return NotImplemented
        c, d = other.re, other.im
        if not d:
            return GaussianRational._raw(self.re / c, self.im / c)
        den = c * c + d * d
        a, b = self.re, self.im
        return GaussianRational._raw((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        return as_gaussian(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return ONE / self**-k
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> GaussianRational:
        return GaussianRational._raw(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return math.hypot(float(self.re), float(self.im))

    # comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def as_gaussian(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, complex):
        raise TypeError("floating complex numbers are not exact; build GaussianRational explicitly")
    return GaussianRational(x)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


@dataclass(frozen=True)
class SqrtPiScaled:
    """The exact value ``rational * pi**(sqrt_pi_power / 2)``."""

    rational: Fraction
    sqrt_pi_power: int = 0

    def __mul__(self, other: SqrtPiScaled) -> SqrtPiScaled:
        return SqrtPiScaled(self.rational * other.rational, self.sqrt_pi_power + other.sqrt_pi_power)

    def __truediv__(self, other: SqrtPiScaled) -> SqrtPiScaled:
        return SqrtPiScaled(self.rational / other.rational, self.sqrt_pi_power - other.sqrt_pi_power)

    def ratio(self, other: SqrtPiScaled) -> Fraction:
        """Quotient as a rational; requires equal powers of sqrt(pi)."""
        if self.sqrt_pi_power != other.sqrt_pi_power:
            raise ValueError("quotient is not rational: sqrt(pi) powers differ")
        return self.rational / other.rational

    def __float__(self) -> float:
        return float(self.rational) * math.pi ** (self.sqrt_pi_power / 2)


def factorial(n: int) -> int:
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    return math.comb(n, k)


@lru_cache(maxsize=None)
def radial_moment(m: int) -> SqrtPiScaled:
    """``I_m = int_0^inf exp(-r^2) r^m dr``, exactly."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    k, odd = divmod(m, 2)
    if odd:
        return SqrtPiScaled(Fraction(math.factorial(k), 2), 0)
    return SqrtPiScaled(Fraction(math.factorial(2 * k), 2 * math.factorial(k) * 4**k), 1)


def moment_ratio(m: int, k: int, j: int, n: int) -> Fraction:
    """``I_{2m+2jk+n-1} / I_{2m+n-1}`` through the closed product

    ``2^{-jk} (n+2m)(n+2m+2)...(n+2m+2jk-2)``.
    """
    if min(m, k, j, n) < 1:
        raise ValueError("moment_ratio needs positive integers")
    return shifted_moment_ratio(2 * m + n - 1, j * k)


def shifted_moment_ratio(base: int, steps: int) -> Fraction:
    """``I_{base + 2*steps} / I_base`` as an exact rational (``steps`` >= 0)."""
    prod = 1
    for t in range(steps):
        prod *= base + 1 + 2 * t
    return Fraction(prod, 2**steps)
