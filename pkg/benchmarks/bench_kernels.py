#!/usr/bin/env python3
"""Benchmark the compiled Bessel kernels against the pure-Python fallback.

Two views: raw kernel throughput (the two-ball secular scan's inner
loop), and one end-to-end d_constant solve with each backend swapped in.

Usage: python benchmarks/bench_kernels.py
"""

import time

from eigenineq import specfun, twoball
from eigenineq.specfun import _pure


def time_kernels(impl, n_calls=20000):
    args = [(0.5 * (i % 7), 0.3 + (i % 97) * 0.45) for i in range(n_calls)]
    t0 = time.perf_counter()
    acc = 0.0
    for v, x in args:
        acc += impl.bessel_j(v, x)
        a, b = impl.bessel_i_scaled_pair(v, x)
        acc += a - b
    return time.perf_counter() - t0, acc


def time_d4(impl):
    saved = specfun._impl
    specfun._impl = impl
    try:
        t0 = time.perf_counter()
        res = twoball.d_constant(4)
        return time.perf_counter() - t0, res.d_n
    finally:
        specfun._impl = saved


def main():
    backends = [("pure", _pure)]
    if specfun._kernels is not None:
        backends.insert(0, ("compiled", specfun._kernels))
    else:
        print("compiled kernels unavailable; benchmarking the fallback only")

    print(f"{'backend':>10s} {'kernel 20k calls':>18s} {'d_constant(4)':>16s} {'d_4':>10s}")
    rows = {}
    for name, impl in backends:
        tk, acc = time_kernels(impl)
        td, d4 = time_d4(impl)
        rows[name] = (tk, td)
        print(f"{name:>10s} {tk * 1e3:15.1f} ms {td * 1e3:13.1f} ms {d4:10.6f}")
    if len(rows) == 2:
        sk = rows["pure"][0] / rows["compiled"][0]
        sd = rows["pure"][1] / rows["compiled"][1]
        print(f"\nspeedup: {sk:.1f}x on raw kernels, {sd:.1f}x end to end")


if __name__ == "__main__":
    main()
