"""Time the compiled sampler kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--n 20000] [--repeat 3]

Both backends consume the same random stream, so the script also checks
that they return identical edge lists.
"""
import argparse
import time

import numpy as np

from plbkit.generators import GirgParams, HyperbolicParams, gen_chung_lu, gen_girg, gen_hyperbolic
from plbkit.weights import power_law_weights


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=20000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    ws = power_law_weights(args.n, 3.0)
    cases = {
        "chung-lu": lambda b: gen_chung_lu(ws, 1, backend=b),
        "girg d=1": lambda b: gen_girg(GirgParams(1, 2.0, ws), 1, method="fast", backend=b),
        "hyperbolic": lambda b: gen_hyperbolic(HyperbolicParams(args.n, 0.75), 1, method="fast", backend=b),
    }
    print(f"{'sampler':<12} {'compiled s':>11} {'python s':>11} {'speedup':>8}  same edges")
    for name, fn in cases.items():
        tc, gc = best_of(lambda: fn("compiled"), args.repeat)
        tp, gp = best_of(lambda: fn("python"), 1)
        same = np.array_equal(gc.u, gp.u) and np.array_equal(gc.v, gp.v) and np.array_equal(gc.mult, gp.mult)
        print(f"{name:<12} {tc:>11.4f} {tp:>11.4f} {tp / tc:>8.1f}  {same}")


if __name__ == "__main__":
    main()
