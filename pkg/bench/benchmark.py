"""Compare the compiled counting kernel against the pure-Python one.

Times the per-pivot triple count on random dense rank matrices and
checks that both backends produce identical counter arrays.

Usage: python bench/benchmark.py [sizes...]
"""

import sys
import time

import numpy as np

from robcert import _kernels_py

try:
    from robcert import _kernels_c
except ImportError:
    _kernels_c = None


def random_ranks(n: int, seed: int, levels: int = 32) -> np.ndarray:
    rng = np.random.default_rng(seed)
    R = rng.integers(0, levels, size=(n, n), dtype=np.int64)
    R = np.minimum(R, R.T)
    np.fill_diagonal(R, 0)
    return np.ascontiguousarray(R)


def time_backend(mod, R: np.ndarray, repeats: int = 3) -> tuple:
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = mod.triple_counts(R)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv):
    sizes = [int(a) for a in argv[1:]] or [64, 96, 128, 192]
    if _kernels_c is None:
        print("compiled backend unavailable; timing fallback only")
    print(f"{'n':>6} {'python (s)':>12} {'compiled (s)':>13} {'speedup':>9}")
    for n in sizes:
        R = random_ranks(n, seed=n)
        tp, fp = time_backend(_kernels_py, R)
        if _kernels_c is not None:
            tc, fc = time_backend(_kernels_c, R)
            if not np.array_equal(fp, fc):
                raise SystemExit(f"backend mismatch at n={n}")
            print(f"{n:>6} {tp:>12.4f} {tc:>13.4f} {tp / tc:>8.1f}x")
        else:
            print(f"{n:>6} {tp:>12.4f} {'-':>13} {'-':>9}")
    print("counter arrays identical across backends"
          if _kernels_c is not None else "")


if __name__ == "__main__":
    main(sys.argv)
