"""Measurement layer: heights, counting functions, exact log comparisons."""

import random
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from urskit.arith import SContext, is_s_integer
from urskit.heights import (
    EQUAL,
    GREATER,
    LESS,
    Magnitude,
    ScaledLog,
    cmp_scaled,
    counting,
    counting_trunc,
    display_log,
    height,
)

S23 = SContext.of([2, 3])

s23_integers = st.builds(
    lambda num, d2, d3: F(num, 2**d2 * 3**d3),
    st.integers(min_value=-10**4, max_value=10**4).filter(lambda n: n != 0),
    st.integers(min_value=0, max_value=5),
    st.integers(min_value=0, max_value=5),
)


def test_magnitude_invariants():
    assert Magnitude(1).is_zero_quantity
    with pytest.raises(ValueError):
        Magnitude(0)
    assert Magnitude(6) * Magnitude(4) == Magnitude(24)
    assert Magnitude(5).pow(3) == Magnitude(125)
    assert Magnitude(5).divides(Magnitude(25))
    assert not Magnitude(7).divides(Magnitude(25))


@pytest.mark.parametrize(
    "x,expected",
    [(F(1), 1), (F(3, 2), 3), (F(-81, 80), 81), (F(0), 1)],
)
def test_height_examples(x, expected):
    assert height(x) == Magnitude(expected)


@pytest.mark.parametrize(
    "x,expected",
    [(F(10), 5), (F(8, 9), 1), (F(50), 25)],
)
def test_counting_examples(x, expected):
    assert counting(S23, x) == Magnitude(expected)


def test_counting_zero_error():
    with pytest.raises(ValueError, match="counting function undefined at zero"):
        counting(S23, F(0))
    with pytest.raises(ValueError, match="counting function undefined at zero"):
        counting_trunc(S23, 1, F(0))


@pytest.mark.parametrize(
    "level,x,expected",
    [(1, F(50), 5), (2, F(1000), 25), (3, F(1), 1), (7, F(1), 1)],
)
def test_counting_trunc_examples(level, x, expected):
    assert counting_trunc(S23, level, x) == Magnitude(expected)


@settings(max_examples=300, derandomize=True)
@given(s23_integers)
def test_monotone_truncation(x):
    full = counting(S23, x)
    prev = counting_trunc(S23, 1, x)
    assert prev.divides(full)
    for level in (2, 3, 5):
        cur = counting_trunc(S23, level, x)
        assert prev.divides(cur)
        assert cur.divides(full)
        prev = cur
    # once the level clears every exponent, truncation is the full count
    assert counting_trunc(S23, 64, x) == full


@settings(max_examples=200, derandomize=True)
@given(s23_integers, st.integers(min_value=1, max_value=6))
def test_power_law(x, k):
    assert counting_trunc(S23, 1, x**k) == counting_trunc(S23, 1, x)


@settings(max_examples=200, derandomize=True)
@given(s23_integers, s23_integers)
def test_additivity_on_s_integers(x, y):
    assert counting(S23, x * y) == counting(S23, x) * counting(S23, y)
    for level in (1, 2):
        prod = counting_trunc(S23, level, x) * counting_trunc(S23, level, y)
        assert counting_trunc(S23, level, x * y) <= prod


@settings(max_examples=300, derandomize=True)
@given(s23_integers)
def test_counting_bounded_by_height(x):
    assert is_s_integer(S23, x)
    assert counting(S23, x) <= height(x)


@settings(max_examples=300, derandomize=True)
@given(
    st.fractions(max_denominator=1000).filter(lambda q: q != 0),
    st.fractions(max_denominator=1000).filter(lambda q: q != 0),
)
def test_quotient_height_law(s, t):
    assert height(s / t).value <= (height(s) * height(t)).value


@pytest.mark.parametrize(
    "a,A,b,B,expected",
    [
        (1, 8, 3, 2, EQUAL),
        (F(1, 2), 9, 1, 3, EQUAL),
        (F(9, 10), 81, 1, 5, GREATER),
        (1, 5, 1, 6, LESS),
        (0, 100, 0, 7, EQUAL),
        (2, 1, 0, 9, EQUAL),
    ],
)
def test_cmp_scaled_examples(a, A, b, B, expected):
    assert cmp_scaled(ScaledLog.of(a, A), ScaledLog.of(b, B)) == expected


def test_cmp_scaled_rejects_negative_coefficient():
    with pytest.raises(ValueError):
        ScaledLog.of(-1, 2)


def test_cmp_scaled_against_mpmath():
    rng = random.Random(20260809)
    mpmath.mp.dps = 50
    ties = disagreements = 0
    for _ in range(2000):
        a = F(rng.randint(0, 40), rng.randint(1, 12))
        b = F(rng.randint(0, 40), rng.randint(1, 12))
        A = rng.randint(1, 10**6)
        B = rng.randint(1, 10**6)
        verdict = cmp_scaled(ScaledLog.of(a, A), ScaledLog.of(b, B))
        diff = mpmath.mpf(a.numerator) / a.denominator * mpmath.log(A) - mpmath.mpf(
            b.numerator
        ) / b.denominator * mpmath.log(B)
        if abs(diff) < mpmath.mpf("1e-40"):
            ties += 1
            assert verdict == EQUAL
        else:
            disagreements += verdict != (1 if diff > 0 else -1)
    assert disagreements == 0


def test_exact_tie_characterization():
    # ties happen exactly when A^(a d) == B^(b d)
    assert cmp_scaled(ScaledLog.of(F(2, 3), 27), ScaledLog.of(2, 3)) == EQUAL
    assert cmp_scaled(ScaledLog.of(F(2, 3), 27), ScaledLog.of(F(2), 3)) == EQUAL
    assert cmp_scaled(ScaledLog.of(F(3, 2), 4), ScaledLog.of(3, 2)) == EQUAL


@pytest.mark.parametrize(
    "value,digits,expected",
    [(1, 3, "0.000"), (5, 4, "1.6094"), (81, 4, "4.3944")],
)
def test_display_log(value, digits, expected):
    assert display_log(Magnitude(value), digits) == expected


def test_display_log_handles_wide_integers():
    assert display_log(Magnitude(2**5000), 2) == f"{5000 * 0.6931471805599453:.2f}"
