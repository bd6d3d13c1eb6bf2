#!/usr/bin/env python3
"""Benchmark the segment-pass inner loop: compiled extension vs pure Python.

Runs the full-period pass (the hot path behind alpha_direct and
verify_theorem) for bases (2,3) at increasing depth m and prints timing
for whichever backends are available, asserting both produce identical
statistics.

    python3 benchmarks/bench_segment.py [--max-m 6] [--repeat 3]
"""

import argparse
import time

from haltonbound import kernel
from haltonbound.kernel import run_segment
from haltonbound.sequence import BaseVector
from haltonbound.witness import (
    modulus_P,
    start_index,
    tau_vector,
    witness_corner,
)


def time_backend(args, backend, repeat):
    best = float("inf")
    stats = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        stats = run_segment(*args, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, stats


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    opts = parser.parse_args()

    bases = BaseVector.of(2, 3)
    tau = tau_vector(bases)
    backends = ["python"]
    if kernel._segment_c is not None:
        backends.insert(0, "c")
    else:
        print("note: compiled kernel not built, timing pure Python only")

    print(f"{'m':>2} {'points':>9}", end="")
    for b in backends:
        print(f" {b + ' [s]':>12} {b + ' [Mpt/s]':>12}", end="")
    print(" equal" if len(backends) == 2 else "")

    for m in range(3, opts.max_m + 1):
        corner = witness_corner(bases, tau, m)
        v, d = corner.volume_scaled()
        start = start_index(bases, tau, m)
        count = modulus_P(bases, tuple(t * m for t in tau.tau))
        args = (bases, tau.tau, m, start, count, d, v)
        row = f"{m:>2} {count:>9}"
        results = []
        for b in backends:
            secs, stats = time_backend(args, b, opts.repeat)
            results.append(stats)
            row += f" {secs:>12.4f} {count / secs / 1e6:>12.2f}"
        if len(results) == 2:
            row += f" {results[0] == results[1]!s:>5}"
            assert results[0] == results[1], "backend results diverge"
        print(row)


if __name__ == "__main__":
    main()
