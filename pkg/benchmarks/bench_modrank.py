#!/usr/bin/env python3
"""Benchmark the prime-field row-reduction kernel: compiled vs pure Python.

The kernel dominates modular oracle runs on large certificates, so this is
the one loop worth compiling.  Usage:

    python3 benchmarks/bench_modrank.py [--sizes 50,100,200,400] [--seed 0]
"""

from __future__ import annotations

import argparse
import random
import time

from seshadri._kernels import BACKEND, modrank, pyref
from seshadri.oracle import MODULAR_DEFAULT_PRIME


def _time(fn, mat, prime):
    t0 = time.perf_counter()
    rank = fn(mat, prime)
    return rank, time.perf_counter() - t0


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="50,100,200,400")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    prime = MODULAR_DEFAULT_PRIME

    print(f"selected backend: {BACKEND}")
    print(f"prime: 2^61 - 1")
    print(f"{'n':>6} {'python (s)':>12} {'selected (s)':>13} {'speedup':>9}")
    rng = random.Random(args.seed)
    for n in sizes:
        mat = [[rng.randrange(prime) for _ in range(n)] for _ in range(n)]
        rank_py, t_py = _time(pyref.modrank, mat, prime)
        rank_sel, t_sel = _time(modrank, mat, prime)
        if rank_py != rank_sel:
            raise SystemExit(f"backend disagreement at n={n}: {rank_py} vs {rank_sel}")
        speedup = t_py / t_sel if t_sel > 0 else float("inf")
        print(f"{n:>6} {t_py:>12.4f} {t_sel:>13.4f} {speedup:>8.1f}x")
    if BACKEND == "python":
        print("note: compiled kernel not built; selected backend is the "
              "reference itself (build with `python3 setup.py build_ext --inplace`)")


if __name__ == "__main__":
    main()
