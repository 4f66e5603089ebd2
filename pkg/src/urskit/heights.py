"""Heights, counting functions, truncated counting functions, and the exact
comparator for rational multiples of logarithms.

A `Magnitude` stores the positive integer M and *means* log M; multiplying
Magnitudes adds the underlying log values with no rounding.  Every inequality
verdict in the package reduces to an integer power comparison through
`cmp_scaled`; decimal output exists only for display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import SContext, factor, _strip_supported

LESS, EQUAL, GREATER = -1, 0, 1

DEFAULT_DISPLAY_DIGITS = 6


@dataclass(frozen=True, order=True)
class Magnitude:
    """A nonnegative log quantity, stored exactly as the integer under the log."""

    value: int

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("Magnitude stores integers >= 1")

    @property
    def is_zero_quantity(self) -> bool:
        return self.value == 1

    def __mul__(self, other: "Magnitude") -> "Magnitude":
        # product of Magnitudes == sum of the log values
        return Magnitude(self.value * other.value)

    def pow(self, k: int) -> "Magnitude":
        if k < 0:
            raise ValueError("Magnitude powers must be nonnegative")
        return Magnitude(self.value**k)

    def divides(self, other: "Magnitude") -> bool:
        return other.value % self.value == 0

    def log_display(self, digits: int = DEFAULT_DISPLAY_DIGITS) -> str:
        return display_log(self, digits)


@dataclass(frozen=True)
class ScaledLog:
    """coefficient * log(base), with an exact comparison rule."""

    coefficient: Fraction
    base: Magnitude

    def __post_init__(self):
        if self.coefficient < 0:
            raise ValueError("ScaledLog coefficients must be nonnegative")

    @classmethod
    def of(cls, coefficient, base) -> "ScaledLog":
        if isinstance(base, int):
            base = Magnitude(base)
        return cls(Fraction(coefficient), base)

    @property
    def is_zero_quantity(self) -> bool:
        return self.coefficient == 0 or self.base.is_zero_quantity

    def log_display(self, digits: int = DEFAULT_DISPLAY_DIGITS) -> str:
        val = float(self.coefficient) * math.log(self.base.value)
        return f"{val:.{digits}f}"


def height(x: Fraction) -> Magnitude:
    """Multiplicative Weil height max(|num|, den) of x in lowest terms."""
    x = Fraction(x)
    return Magnitude(max(abs(x.numerator), x.denominator))


def counting(S: SContext, x: Fraction) -> Magnitude:
    """Counting function of zeros outside S: the non-S part of the numerator.

    The budget discipline applies: the non-S part must factor completely.
    """
    x = Fraction(x)
    if x == 0:
        raise ValueError("counting function undefined at zero")
    non_s = _strip_supported(abs(x.numerator), S.primes)
    factor(non_s, S.factoring_budget)
    return Magnitude(non_s)


def counting_trunc(S: SContext, level: int, x: Fraction) -> Magnitude:
    """Counting function with each multiplicity capped at `level`."""
    if level < 1:
        raise ValueError("truncation level must be a positive integer")
    x = Fraction(x)
    if x == 0:
        raise ValueError("counting function undefined at zero")
    non_s = _strip_supported(abs(x.numerator), S.primes)
    capped = 1
    for p, e in factor(non_s, S.factoring_budget).factors:
        capped *= p ** min(e, level)
    return Magnitude(capped)


def cmp_scaled(lhs: ScaledLog, rhs: ScaledLog) -> int:
    """Exact ordering of a*log(A) vs b*log(B): -1, 0 or +1.

    Decided by comparing A**(a*d) with B**(b*d) as integers, where d is the
    common denominator of the two coefficients.  No floating point.
    """
    a, b = lhs.coefficient, rhs.coefficient
    d = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    ea = int(a * d)
    eb = int(b * d)
    A = lhs.base.value
    B = rhs.base.value
    if A == B:
        if A == 1:
            return EQUAL
        return (ea > eb) - (ea < eb)
    left = A**ea
    right = B**eb
    return (left > right) - (left < right)


def display_log(m: Magnitude, digits: int = DEFAULT_DISPLAY_DIGITS) -> str:
    """Decimal approximation of log(value), display-only (natural log)."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    return f"{math.log(m.value):.{digits}f}"
