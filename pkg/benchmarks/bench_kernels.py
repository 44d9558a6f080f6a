#!/usr/bin/env python3
"""Compare the compiled and pure-Python coverage-scoring kernels.

Usage: python benchmarks/bench_kernels.py [--candidates M] [--voters N]
       [--k K] [--repeat R]

Times betacc_best_committee (the exhaustive branch-and-bound search that
dominates solver runtime) on identical synthetic inputs and reports the
speedup. Falls back gracefully when the compiled extension is absent.
"""

import argparse
import statistics
import time

from direfair.kernels import pure
from direfair.synthgen import GenConfig, generate_election

try:
    from direfair.kernels import _ccscore as compiled
except ImportError:
    compiled = None


def time_backend(fn, positions, k, repeat):
    times = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(positions, k)
        times.append(time.perf_counter() - start)
    return min(times), statistics.median(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--candidates", type=int, default=16)
    parser.add_argument("--voters", type=int, default=50)
    parser.add_argument("--k", type=int, default=5)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--phi", type=float, default=0.8)
    args = parser.parse_args()

    cfg = GenConfig(args.candidates, args.voters, args.k, phi=args.phi,
                    seed="bench")
    positions = generate_election(cfg).positions
    print(f"m={args.candidates} n={args.voters} k={args.k} phi={args.phi} "
          f"repeat={args.repeat}")

    best_pure, med_pure, res_pure = time_backend(
        pure.betacc_best_committee, positions, args.k, args.repeat)
    print(f"pure:     best {best_pure * 1e3:8.2f} ms   median {med_pure * 1e3:8.2f} ms"
          f"   score {res_pure[0]}")

    if compiled is None:
        print("compiled: extension not built (pip install -e . with Cython)")
        return

    best_c, med_c, res_c = time_backend(
        compiled.betacc_best_committee, positions, args.k, args.repeat)
    print(f"compiled: best {best_c * 1e3:8.2f} ms   median {med_c * 1e3:8.2f} ms"
          f"   score {res_c[0]}")
    assert res_c == res_pure, "backends disagree"
    print(f"speedup:  {best_pure / best_c:.1f}x (identical results)")


if __name__ == "__main__":
    main()
