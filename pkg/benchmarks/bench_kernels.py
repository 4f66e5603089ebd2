#!/usr/bin/env python3
"""Benchmark the compiled integer kernel against the pure-Python fallback.

The kernel sits under every counting-function evaluation and every box
search, so trial division and primality dominate the package's runtime.

Usage:
    python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import random
import time

from urskit._kernel import pure

try:
    from urskit._kernel import _speedups as compiled
except ImportError:
    compiled = None


def bench(label, backends, fn, *args):
    results = {}
    for name, mod in backends:
        start = time.perf_counter()
        checksum = fn(mod, *args)
        elapsed = time.perf_counter() - start
        results[name] = (elapsed, checksum)
    checks = {c for _, c in results.values()}
    assert len(checks) == 1, f"backend disagreement in {label}: {results}"
    line = f"{label:<42}"
    for name, (elapsed, _) in results.items():
        line += f"  {name}: {elapsed:8.3f}s"
    if len(results) == 2:
        (t_pure, _), (t_comp, _) = results["pure"], results["compiled"]
        line += f"  speedup: {t_pure / t_comp:6.1f}x"
    print(line)


def factor_range(mod, lo, hi):
    """Fully factor every integer in [lo, hi) through the kernel primitives."""
    total = 0
    for n in range(lo, hi):
        cof = n
        while cof > 1:
            if mod.is_prime(cof):
                total += cof
                break
            p = mod.smallest_factor_below(cof, 10**9)
            while cof % p == 0:
                cof //= p
            total += p
    return total


def primality_range(mod, lo, hi):
    return sum(1 for n in range(lo, hi) if mod.is_prime(n))


def stubborn_semiprimes(mod, seed, count, scale):
    """Trial-divide semiprimes whose factors sit near sqrt(n): worst case."""
    rng = random.Random(seed)
    total = 0
    for _ in range(count):
        a = rng.randint(scale, 2 * scale)
        while not pure.is_prime(a):
            a += 1
        b = rng.randint(scale, 2 * scale)
        while not pure.is_prime(b):
            b += 1
        total += mod.smallest_factor_below(a * b, 10**9)
    return total


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    if compiled is None:
        print("compiled kernel not built; showing pure timings only")
        backends = [("pure", pure)]
    else:
        backends = [("pure", pure), ("compiled", compiled)]

    k = 1 if not args.quick else 10
    print(f"integer-kernel benchmark ({'quick' if args.quick else 'full'})\n")
    bench("factor [2, 200000)", backends, factor_range, 2, 200_000 // k)
    bench("primality [10^9, 10^9 + 40000)", backends, primality_range, 10**9, 10**9 + 40_000 // k)
    bench("stubborn semiprimes (~10^10)", backends, stubborn_semiprimes, 1, 60 // k or 1, 50_000)
    bench("stubborn semiprimes (~10^12)", backends, stubborn_semiprimes, 2, 12 // k or 1, 600_000)


if __name__ == "__main__":
    main()
