#!/usr/bin/env python3
"""Benchmark the jit-compiled girth kernel against the pure-Python
twin on the augmented semiplane graphs.

Usage:
    python benchmarks/bench_girth.py
    python benchmarks/bench_girth.py --qs 7 8 9 11 --repeat 3
    python benchmarks/bench_girth.py --qs 7 8 --no-python   # jit only

The two backends run the identical search and must return identical
reports; the script asserts that before printing timings.  Force the
fallback everywhere instead with MIXEDCAGES_NO_NUMBA=1.
"""

import argparse
import time

from mixedcages import build_hq, make_field, mixed_girth
from mixedcages._kernels import girth_scan_numba


def time_backend(graph, backend, repeat):
    best = None
    report = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        report = mixed_girth(graph, cutoff=6, backend=backend)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, report


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--qs", type=int, nargs="+", default=[7, 8, 9, 11, 13],
                    help="field orders to benchmark (prime powers >= 7)")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--no-python", action="store_true",
                    help="skip the pure-Python twin (useful for large q)")
    args = ap.parse_args()

    if girth_scan_numba is None:
        print("numba backend unavailable; timing the Python twin only")

    # trigger compilation outside the timed region
    warm, _ = build_hq(make_field(7))
    mixed_girth(warm.graph, cutoff=6)

    print(f"{'q':>4} {'n':>6} {'darts':>7} {'numba (s)':>10} "
          f"{'python (s)':>11} {'speedup':>8}")
    for q in args.qs:
        lg, _ = build_hq(make_field(q))
        g = lg.graph
        darts = 2 * g.num_edges + g.num_arcs
        t_jit = t_py = None
        rep_jit = rep_py = None
        if girth_scan_numba is not None:
            t_jit, rep_jit = time_backend(g, "numba", args.repeat)
        if not args.no_python:
            t_py, rep_py = time_backend(g, "python", args.repeat)
        if rep_jit and rep_py:
            assert rep_jit == rep_py, f"backend mismatch at q={q}"
        cells = [
            f"{q:>4}", f"{g.n:>6}", f"{darts:>7}",
            f"{t_jit:>10.4f}" if t_jit is not None else f"{'-':>10}",
            f"{t_py:>11.4f}" if t_py is not None else f"{'-':>11}",
            f"{t_py / t_jit:>7.1f}x" if t_jit and t_py else f"{'-':>8}",
        ]
        print(" ".join(cells))


if __name__ == "__main__":
    main()
