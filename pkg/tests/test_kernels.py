"""Backend equivalence: the compiled kernel must match the pure one bit for bit."""

import pytest

from urskit import _kernel
from urskit._kernel import pure


def _reference_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_pure_is_prime_small_range():
    for n in range(2000):
        assert pure.is_prime(n) == _reference_is_prime(n), n


def test_pure_is_prime_known_values():
    assert pure.is_prime(2**31 - 1)  # Mersenne prime
    assert not pure.is_prime(561)  # Carmichael
    assert not pure.is_prime(3215031751)  # strong pseudoprime to 2,3,5,7
    assert pure.is_prime(1_000_000_007)


def test_smallest_factor_below_pure():
    assert pure.smallest_factor_below(91, 10) == 7
    assert pure.smallest_factor_below(91, 6) == 0  # horizon too small
    assert pure.smallest_factor_below(2**2 * 3, 100) == 2
    assert pure.smallest_factor_below(49, 7) == 7
    # prime: no factor at or below isqrt
    assert pure.smallest_factor_below(97, 100) == 0


compiled = pytest.importorskip("urskit._kernel._speedups", reason="extension not built")


def test_backends_agree_primality():
    for n in range(1, 5000):
        assert compiled.is_prime(n) == pure.is_prime(n), n
    for n in (2**61 - 1, 2**61 + 1, 10**18 + 9, 10**18 + 7):
        assert compiled.is_prime(n) == pure.is_prime(n), n


def test_backends_agree_smallest_factor():
    for n in range(2, 3000):
        assert compiled.smallest_factor_below(n, 10**6) == pure.smallest_factor_below(
            n, 10**6
        ), n
    for n, limit in ((10**12 + 39, 10**6), (999999999989, 10**6), (49, 6), (49, 7)):
        assert compiled.smallest_factor_below(n, limit) == pure.smallest_factor_below(
            n, limit
        ), (n, limit)


def test_dispatch_handles_wide_integers():
    # values beyond 64 bits route to the pure backend transparently
    assert _kernel.is_prime(2**89 - 1) == pure.is_prime(2**89 - 1)
    wide = 2**70 * 3
    assert _kernel.smallest_factor_below(wide, 10) == 2
