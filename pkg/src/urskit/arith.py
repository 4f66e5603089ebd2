"""Exact rational ground layer: places, S-contexts, valuations, factoring,
S-integer/S-unit predicates, and S-unit equation enumeration.

Every quantity is an exact `fractions.Fraction` or Python int; nothing here
ever rounds.  Factoring is budgeted: inputs whose non-smooth part exceeds the
configured budget fail loudly instead of degrading.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from . import _kernel as kernel

Rational = Fraction

DEFAULT_FACTORING_BUDGET = 10**12


class UrskitError(Exception):
    """Base class for package-specific failures."""


class FactoringBudgetError(UrskitError):
    """A cofactor could not be fully factored within the configured budget."""

    def __init__(self, cofactor: int, budget: int):
        self.cofactor = cofactor
        self.budget = budget
        super().__init__(
            f"factoring budget {budget} exceeded: cofactor {cofactor} "
            f"has no prime factor within the trial horizon"
        )


_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse the wire format 'a/b' (or 'a').  Floats are rejected."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(
            f"not a rational in 'a/b' form: {text!r} (floats are not accepted)"
        )
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def rational_str(x: Fraction) -> str:
    """Inverse of parse_rational: 'a/b', or 'a' when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_certified_prime(p: int) -> bool:
    """Deterministic primality; False for anything past the certificate range."""
    if p >= kernel.CERTIFIED_LIMIT:
        return False
    return kernel.is_prime(p)


@dataclass(frozen=True)
class Place:
    """A place of Q: the Archimedean absolute value or a p-adic one."""

    kind: str  # "archimedean" | "finite"
    prime: int | None = None

    def __post_init__(self):
        if self.kind == "archimedean":
            if self.prime is not None:
                raise ValueError("archimedean place carries no prime")
        elif self.kind == "finite":
            if self.prime is None or not is_certified_prime(self.prime):
                raise ValueError(f"finite place needs a certified prime, got {self.prime}")
        else:
            raise ValueError(f"unknown place kind: {self.kind!r}")

    @classmethod
    def archimedean(cls) -> "Place":
        return cls("archimedean")

    @classmethod
    def finite(cls, p: int) -> "Place":
        return cls("finite", p)


@dataclass(frozen=True)
class SContext:
    """The finite-prime part of S.  The Archimedean place is always implied.

    `factoring_budget` is the largest integer the context promises to factor
    completely; it bounds trial division at isqrt(budget).
    """

    primes: tuple[int, ...] = ()
    factoring_budget: int = DEFAULT_FACTORING_BUDGET

    def __post_init__(self):
        if self.factoring_budget < 1:
            raise ValueError("factoring budget must be positive")
        prev = 1
        for p in self.primes:
            if p <= prev:
                raise ValueError("primes of S must be strictly increasing")
            if not is_certified_prime(p):
                raise ValueError(f"{p} is not a certified prime")
            prev = p

    @classmethod
    def of(cls, primes, factoring_budget: int = DEFAULT_FACTORING_BUDGET) -> "SContext":
        return cls(tuple(sorted(set(primes))), factoring_budget)

    def places(self) -> tuple[Place, ...]:
        return (Place.archimedean(),) + tuple(Place.finite(p) for p in self.primes)

    def __str__(self):
        return "{" + ",".join(str(p) for p in self.primes) + "}"


@dataclass(frozen=True)
class Factorization:
    """Signed prime factorization; re-multiplying reproduces the input exactly."""

    sign: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent), primes increasing

    def value(self) -> int:
        n = self.sign
        for p, e in self.factors:
            n *= p**e
        return n

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


@lru_cache(maxsize=65536)
def _factor_positive(n: int, horizon: int, budget: int) -> tuple[tuple[int, int], ...]:
    out = []
    cof = n
    while cof > 1:
        if cof < kernel.CERTIFIED_LIMIT and kernel.is_prime(cof):
            out.append((cof, 1))
            break
        p = kernel.smallest_factor_below(cof, horizon)
        if p == 0:
            raise FactoringBudgetError(cof, budget)
        e = 0
        while cof % p == 0:
            cof //= p
            e += 1
        out.append((p, e))
    out.sort()
    merged = []
    for p, e in out:
        if merged and merged[-1][0] == p:
            merged[-1] = (p, merged[-1][1] + e)
        else:
            merged.append((p, e))
    return tuple(merged)


def factor(n: int, budget: int = DEFAULT_FACTORING_BUDGET) -> Factorization:
    """Exact deterministic prime factorization of a nonzero integer.

    Raises FactoringBudgetError when a composite cofactor survives trial
    division up to isqrt(budget); every |n| <= budget factors completely.
    """
    if n == 0:
        raise ValueError("cannot factor zero")
    sign = 1 if n > 0 else -1
    return Factorization(sign, _factor_positive(abs(n), isqrt(budget), budget))


def ord_at(p: int, x: Fraction) -> int:
    """The p-adic valuation of a nonzero rational."""
    if x == 0:
        raise ValueError("valuation of zero undefined")
    if not is_certified_prime(p):
        raise ValueError(f"{p} is not prime")
    x = Fraction(x)
    num, den = abs(x.numerator), x.denominator
    e = 0
    while num % p == 0:
        num //= p
        e += 1
    if e:
        return e
    while den % p == 0:
        den //= p
        e -= 1
    return e


def _strip_supported(n: int, primes) -> int:
    """Divide out every power of the given primes; n > 0."""
    for p in primes:
        while n % p == 0:
            n //= p
    return n


def is_s_integer(S: SContext, x: Fraction) -> bool:
    """True iff every prime of the denominator lies in S (0 counts)."""
    x = Fraction(x)
    return _strip_supported(x.denominator, S.primes) == 1


def is_s_unit(S: SContext, x: Fraction) -> bool:
    """True iff x is nonzero and numerator and denominator are S-supported."""
    x = Fraction(x)
    if x == 0:
        return False
    return (
        _strip_supported(abs(x.numerator), S.primes) == 1
        and _strip_supported(x.denominator, S.primes) == 1
    )


def s_decompose(S: SContext, n: int) -> tuple[int, int]:
    """Split n >= 1 as (S-part, non-S part); the non-S part must be factorable."""
    if n < 1:
        raise ValueError("s_decompose expects a positive integer")
    non_s = _strip_supported(n, S.primes)
    factor(non_s, S.factoring_budget)  # budget discipline: fail loudly here
    return n // non_s, non_s


def non_s_ord_profile(S: SContext, x: Fraction) -> dict[int, int]:
    """Map p -> ord_p(x) over primes p outside S with nonzero valuation."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of zero undefined")
    profile: dict[int, int] = {}
    num = _strip_supported(abs(x.numerator), S.primes)
    den = _strip_supported(x.denominator, S.primes)
    for p, e in factor(num, S.factoring_budget).factors:
        profile[p] = e
    for p, e in factor(den, S.factoring_budget).factors:
        profile[p] = profile.get(p, 0) - e
    return dict(sorted(profile.items()))


def unit_equation_solutions(
    S: SContext, exponent_bound: int
) -> list[tuple[Fraction, Fraction]]:
    """All S-unit pairs (u, v) with u + v = 1 and |ord_p(u)| <= bound on S.

    Enumerates u over signed exponent vectors and keeps pairs whose v = 1 - u
    is an S-unit.  Output is duplicate-free and sorted by (numerator,
    denominator) of u, then of v.
    """
    if exponent_bound < 0:
        raise ValueError("exponent bound must be nonnegative")
    sols = []
    ranges = [range(-exponent_bound, exponent_bound + 1)] * len(S.primes)
    for exps in itertools.product(*ranges):
        mag = Fraction(1)
        for p, e in zip(S.primes, exps):
            mag *= Fraction(p) ** e
        for sign in (1, -1):
            u = sign * mag
            v = 1 - u
            if is_s_unit(S, v):
                sols.append((u, v))
    sols.sort(
        key=lambda pair: (
            pair[0].numerator,
            pair[0].denominator,
            pair[1].numerator,
            pair[1].denominator,
        )
    )
    return sols
