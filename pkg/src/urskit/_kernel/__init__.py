"""Integer kernel with a compiled fast path and a pure-Python fallback.

The backend is selected once at import: the Cython extension when it built,
otherwise the pure module.  `URSKIT_PURE=1` forces the fallback.  Values
wider than 64 bits always take the pure path; answers are identical either
way, only the speed differs.
"""

import os

from . import pure

try:
    from . import _speedups
except ImportError:
    _speedups = None

if _speedups is not None and not os.environ.get("URSKIT_PURE"):
    _fast = _speedups
    BACKEND = "compiled"
else:
    _fast = None
    BACKEND = "pure"

# Deterministic Miller-Rabin certificate bound (both backends).
CERTIFIED_LIMIT = pure.CERTIFIED_LIMIT

_U64_MAX = 2**64 - 1


def is_prime(n):
    """Deterministic primality for 0 <= n < CERTIFIED_LIMIT."""
    if _fast is not None and n <= _U64_MAX:
        return _fast.is_prime(n)
    return pure.is_prime(n)


def smallest_factor_below(n, limit):
    """Smallest prime factor of n within min(isqrt(n), limit), else 0."""
    if _fast is not None and n <= _U64_MAX:
        return _fast.smallest_factor_below(n, limit)
    return pure.smallest_factor_below(n, limit)
