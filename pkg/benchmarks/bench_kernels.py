"""Benchmark the compiled term-arithmetic kernel against the pure-Python
fallback on polynomial multiplication and resolution workloads.

Run:  python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from lctplane import _kernel_c, _kernel_py  # type: ignore[attr-defined]


def random_terms(rng, n_terms, max_exp=12):
    terms = {}
    while len(terms) < n_terms:
        key = (rng.randint(0, max_exp), rng.randint(0, max_exp))
        terms[key] = Fraction(rng.randint(-99, 99), rng.randint(1, 9))
    return terms


def bench(kernel, pairs, repeats):
    start = time.perf_counter()
    for _ in range(repeats):
        for a, b in pairs:
            kernel.mul_terms(a, b)
            kernel.add_terms(a, b)
    return time.perf_counter() - start


def main():
    rng = random.Random(20240817)
    sizes = [8, 32, 128]
    print(f"{'terms':>6} {'python (s)':>12} {'cython (s)':>12} {'speedup':>8}")
    for size in sizes:
        pairs = [(random_terms(rng, size), random_terms(rng, size)) for _ in range(20)]
        repeats = max(1, 2000 // size)
        # check agreement before timing
        for a, b in pairs:
            assert _kernel_py.mul_terms(a, b) == _kernel_c.mul_terms(a, b)
            assert _kernel_py.add_terms(a, b) == _kernel_c.add_terms(a, b)
        t_py = bench(_kernel_py, pairs, repeats)
        t_c = bench(_kernel_c, pairs, repeats)
        print(f"{size:>6} {t_py:>12.4f} {t_c:>12.4f} {t_py / t_c:>8.2f}x")


if __name__ == "__main__":
    main()
