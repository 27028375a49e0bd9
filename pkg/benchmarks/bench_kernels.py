#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-python fallback.

Times the sieve construction, the derived multiplicative tables and a
compensated weighted sum at a given limit, then prints one table row
per kernel with the speedup of the compiled core.

Usage:
    python benchmarks/bench_kernels.py [--n 10000000] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

import totsum._kernels_py as kernels_py

try:
    import totsum._kernels as kernels_compiled
except ImportError:
    kernels_compiled = None


def best_of(repeat: int, fn, *args) -> tuple[float, object]:
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=lambda s: int(float(s)), default=10**7)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    n, repeat = args.n, args.repeat

    if kernels_compiled is None:
        print("compiled kernels unavailable; timing the python backend only")
    backends = {"python": kernels_py}
    if kernels_compiled is not None:
        backends["compiled"] = kernels_compiled

    timings: dict[str, dict[str, float]] = {name: {} for name in backends}
    tables: dict[str, dict[str, object]] = {name: {} for name in backends}

    for name, kern in backends.items():
        t, spf = best_of(repeat, kern.spf_sieve, n)
        timings[name]["spf_sieve"] = t
        tables[name]["spf"] = spf
        for label, fn in [
            ("phi_table", kern.phi_from_spf),
            ("sigma_table", kern.sigma_from_spf),
            ("mobius_table", kern.mobius_from_spf),
        ]:
            t, out = best_of(repeat, fn, spf)
            timings[name][label] = t
            tables[name][label] = out
        t, _ = best_of(repeat, kern.jordan_from_spf, spf, 2)
        timings[name]["jordan2_table"] = t
        phi = tables[name]["phi_table"]
        terms = np.arange(1, n + 1, dtype=np.float64) / np.asarray(phi[1:], dtype=np.float64)
        bounds = np.array([n // 100, n // 10, n], dtype=np.int64)
        t, sums = best_of(repeat, kern.neumaier_partial_sums, terms, bounds)
        timings[name]["weighted_sum"] = t
        tables[name]["sums"] = sums

    if len(backends) == 2:
        for label in ["spf", "phi_table", "sigma_table", "mobius_table"]:
            a = tables["python"].get(label if label != "spf" else "spf")
            b = tables["compiled"].get(label if label != "spf" else "spf")
            assert np.array_equal(a, b), f"backend mismatch in {label}"
        gap = np.max(np.abs(tables["python"]["sums"] - tables["compiled"]["sums"]))
        print(f"backends agree; max weighted-sum gap {gap:.3e}\n")

    kernels = list(next(iter(timings.values())).keys())
    width = max(len(k) for k in kernels)
    header = f"{'kernel':<{width}}  " + "".join(f"{name:>12}" for name in timings)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(f"n = {n:,} (best of {repeat})")
    print(header)
    for k in kernels:
        row = f"{k:<{width}}  " + "".join(f"{timings[name][k]:>11.3f}s" for name in timings)
        if len(backends) == 2:
            row += f"{timings['python'][k] / timings['compiled'][k]:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
