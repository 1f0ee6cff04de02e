"""Benchmark the compiled boundary-search kernel against the numpy fallback.

Usage:
    python3 benchmarks/bench_kernels.py [--pairs 20000] [--repeats 5]
"""

import argparse
import time

import numpy as np

from hypmetrics.kernels import _ref

try:
    from hypmetrics.kernels import _fast
except ImportError:
    _fast = None


def make_inputs(pairs, seed=0):
    rng = np.random.default_rng(seed)
    xu, xv, yu, yv = rng.uniform(-0.95, 0.95, size=(4, pairs))
    return xu, xv, yu, yv, np.ones(pairs)


def bench(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", type=int, default=20000)
    ap.add_argument("--repeats", type=int, default=5)
    opts = ap.parse_args()

    args = make_inputs(opts.pairs)
    t_ref = bench(_ref.circle_min_product, args, opts.repeats)
    print(f"python  backend: {t_ref:8.4f} s  "
          f"({opts.pairs / t_ref:10.0f} pairs/s)")

    if _fast is None:
        print("compiled backend: not built")
        return

    t_fast = bench(_fast.circle_min_product, args, opts.repeats)
    print(f"compiled backend: {t_fast:8.4f} s  "
          f"({opts.pairs / t_fast:10.0f} pairs/s)")
    print(f"speedup: {t_ref / t_fast:.2f}x")

    p_ref, _ = _ref.circle_min_product(*args)
    p_fast, _ = _fast.circle_min_product(*args)
    print(f"max |ref - fast|: {np.max(np.abs(p_ref - p_fast)):.3e}")


if __name__ == "__main__":
    main()
