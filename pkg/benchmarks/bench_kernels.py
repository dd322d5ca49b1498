"""Benchmark the oracle scoring kernels: numba JIT path vs numpy fallback.

The brute-force oracle scores every Kraft-feasible nondecreasing length
vector against a distribution; for n = 10 that is 22,214 vectors per
objective per distribution, which is the package's hot loop.

Usage: python3 benchmarks/bench_kernels.py [--n N] [--repeat R]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from minimaxcode import _kernels
from minimaxcode.oracle import length_matrix

HAS_NUMBA = _kernels.avg_scores is not _kernels.avg_scores_numpy


def _time(fn, args, repeat: int) -> float:
    fn(*args)  # warm-up (triggers JIT compilation on the numba path)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=10, help="alphabet size (2..12)")
    ap.add_argument("--repeat", type=int, default=20, help="timing repeats")
    args = ap.parse_args()

    rng = np.random.default_rng(7)
    p = np.sort(rng.exponential(size=args.n))[::-1]
    p /= p.sum()
    lgp = np.log2(p)
    L = length_matrix(args.n)

    cases = [
        ("avg", _kernels.avg_scores_numpy, (L, p, lgp)),
        ("minimax", _kernels.minimax_scores_numpy, (L, p, lgp)),
        ("exp[a=0.5]", _kernels.exp_scores_numpy, (L, p, lgp, np.log2(0.5))),
        ("dexp[d=2]", _kernels.dexp_scores_numpy, (L, p, lgp, 2.0)),
    ]

    print(f"n = {args.n}: {L.shape[0]} length vectors per objective")
    print(f"numba path available: {HAS_NUMBA}")
    header = f"{'objective':<12} {'numpy (ms)':>12} {'numba (ms)':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, np_fn, call_args in cases:
        t_np = _time(np_fn, call_args, args.repeat) * 1e3
        if HAS_NUMBA:
            nb_fn = getattr(_kernels, np_fn.__name__.replace("_numpy", "_numba"))
            t_nb = _time(nb_fn, call_args, args.repeat) * 1e3
            print(f"{name:<12} {t_np:>12.3f} {t_nb:>12.3f} {t_np / t_nb:>8.1f}x")
        else:
            print(f"{name:<12} {t_np:>12.3f} {'-':>12} {'-':>9}")


if __name__ == "__main__":
    main()
