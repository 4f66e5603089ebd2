# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernel: deterministic primality and trial division.

Machine-word (u64) twin of `pure.py`.  The dispatching front end in
`_kernel/__init__.py` routes values above 2**64-1 to the pure backend, so
both backends together cover arbitrary precision with identical answers.
"""

BACKEND = "compiled"

CERTIFIED_LIMIT = 3_317_044_064_679_887_385_961_981

U64_MAX = 18446744073709551615

from libc.math cimport sqrt

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

ctypedef unsigned long long u64

cdef u64[12] _WITNESSES
_WITNESSES[:] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]

cdef int[8] _WHEEL
_WHEEL[:] = [4, 2, 4, 2, 4, 6, 2, 6]


cdef inline u64 _mulmod(u64 a, u64 b, u64 m) nogil:
    return <u64>((<u128>a * b) % m)


cdef inline u64 _powmod(u64 a, u64 d, u64 m) nogil:
    cdef u64 r = 1
    a %= m
    while d:
        if d & 1:
            r = _mulmod(r, a, m)
        a = _mulmod(a, a, m)
        d >>= 1
    return r


cdef bint _is_prime_u64(u64 n) nogil:
    cdef u64 d, x, a
    cdef int s, i, j
    if n < 2:
        return False
    for i in range(12):
        a = _WITNESSES[i]
        if n % a == 0:
            return n == a
    d = n - 1
    s = 0
    while d % 2 == 0:
        d >>= 1
        s += 1
    for i in range(12):
        a = _WITNESSES[i]
        x = _powmod(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for j in range(s - 1):
            x = _mulmod(x, x, n)
            if x == n - 1:
                break
        else:
            return False
    return True


cdef u64 _isqrt_u64(u64 n) nogil:
    cdef u64 r
    if n == 0:
        return 0
    r = <u64>sqrt(<double>n)
    if r > <u64>4294967295:
        r = <u64>4294967295
    while <u128>r * r > <u128>n:
        r -= 1
    while <u128>(r + 1) * (r + 1) <= <u128>n:
        r += 1
    return r


def is_prime(n):
    """Deterministic primality for 0 <= n <= U64_MAX."""
    return bool(_is_prime_u64(<u64>n))


def smallest_factor_below(n, limit):
    """Smallest prime factor of n that is <= min(isqrt(n), limit), else 0."""
    cdef u64 nn = <u64>n
    cdef u64 lim = <u64>min(limit, U64_MAX)
    cdef u64 top, d
    cdef int i
    if nn % 2 == 0:
        return 2
    if nn % 3 == 0:
        return 3
    if nn % 5 == 0:
        return 5
    top = _isqrt_u64(nn)
    if lim < top:
        top = lim
    d = 7
    i = 0
    with nogil:
        while d <= top:
            if nn % d == 0:
                break
            d += _WHEEL[i]
            i = (i + 1) & 7
        else:
            d = 0
    return d
