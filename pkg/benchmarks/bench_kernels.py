"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import time

import numpy as np

from framegap import _kernels_py as py

try:
    from framegap import _kernels as compiled
except ImportError:
    compiled = None

CASES = {
    "coset sum, Z u (Z+1/2), R=1e4": ("coset_sinc2_sum", (0.3, np.array([0.0, 0.5]), 1.0, 1e4, True)),
    "coset sum, 10 offsets, R=1e5": ("coset_sinc2_sum", (0.3, np.arange(10) / 10.0, 1.0, 1e5, True)),
    "sinc product, N=1e6": ("sinc_product_sum", (0.1, 0.45, 10**6)),
    "additive branch, |n|<=1e5": ("additive_branch_sum", (0.0, 1.0, 0.3, 0.45, 1.0, 0.5, -10**5, 10**5)),
}


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"{'case':34s} {'python ms':>10s} {'compiled ms':>12s} {'speedup':>8s} {'rel diff':>9s}")
    for name, (fn, fargs) in CASES.items():
        tp, vp = best_of(getattr(py, fn), fargs, args.repeat)
        if compiled is None:
            print(f"{name:34s} {tp * 1e3:10.2f} {'n/a':>12s}")
            continue
        tc, vc = best_of(getattr(compiled, fn), fargs, args.repeat)
        a, b = np.atleast_1d(vp), np.atleast_1d(vc)
        rel = float(np.max(np.abs(a - b) / np.maximum(np.abs(a), 1e-300)))
        print(f"{name:34s} {tp * 1e3:10.2f} {tc * 1e3:12.2f} {tp / tc:7.1f}x {rel:9.1e}")


if __name__ == "__main__":
    main()
