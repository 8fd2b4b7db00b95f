"""Time the compiled and pure-Python strata kernels on the same workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload is a random set of candidate columns of the size that the
exhaustive search meets for parameters of dimension 10 to 14. The script
checks that both kernels return identical output before timing them.
"""

from __future__ import annotations

import argparse
import random
import time

from lpdescent import _purecore

try:
    from lpdescent import _fastcore
except ImportError:  # extension not built
    _fastcore = None

WORKLOADS = [
    # (label, number of columns, nbits, max_dim)
    ("small", 14, 6, 10),
    ("medium", 20, 8, 12),
    ("large", 26, 10, 14),
]


def make_workload(n: int, nbits: int, max_dim: int, seed: int):
    rng = random.Random(seed)
    dims = sorted(rng.choice((1, 1, 2, 2, 3, 4)) for _ in range(n))
    cols = [rng.getrandbits(nbits) for _ in range(n)]
    wmask = rng.getrandbits(nbits) if rng.random() < 0.5 else 0
    return cols, dims, max_dim, max_dim % 2, wmask, nbits, 10 ** 9


def timed(fn, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    if _fastcore is None:
        print("compiled kernel not available; only the pure-Python timings are shown")
    print(f"{'workload':<8} {'cols':>5} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, n, nbits, max_dim in WORKLOADS:
        w = make_workload(n, nbits, max_dim, args.seed)
        tp = timed(_purecore.strata, w, args.repeat)
        if _fastcore is None:
            print(f"{label:<8} {n:>5} {tp:>10.4f} {'-':>10} {'-':>8}")
            continue
        if _fastcore.strata(*w) != _purecore.strata(*w):
            raise SystemExit(f"{label}: kernels disagree")
        tc = timed(_fastcore.strata, w, args.repeat)
        print(f"{label:<8} {n:>5} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
