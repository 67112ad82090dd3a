#!/usr/bin/env python3
"""Compare the pure-Python and numba kernel backends on the two hot searches.

Runs each kernel on a fixed fixture set (products and seeded random graphs,
all within the 64-vertex one-word limit so both backends apply), reports the
best wall time of ``--repeat`` runs per cell, and verifies that the two
backends return identical results.  jit compilation happens in a warm-up pass
and is excluded from the timings.

Usage: python benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ucir._kernels import pure
from ucir.graphs import categorical_power, categorical_product, family
from ucir.rng import SplitMix64, random_graph

try:
    import numpy as np

    from ucir._kernels import jit
except ImportError:
    jit = None


def fixtures():
    c5 = family("cycle", [5])
    c6 = family("cycle", [6])
    out = [
        ("C5 x C5 (25v)", categorical_product(c5, c5)),
        ("C6 x C6 (36v)", categorical_product(c6, c6)),
        ("K4^3 (64v)", categorical_power(family("complete", [4]), 3)),
        ("G(24, 1/2)", random_graph(SplitMix64(8), 24)),
        ("G(30, 1/2)", random_graph(SplitMix64(9), 30)),
        ("G(40, 1/2)", random_graph(SplitMix64(10), 40)),
    ]
    return out


def best_time(fn, *args, repeat: int) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    kernels = [
        ("alpha", pure.max_independent_set_mask, None if jit is None else jit.max_independent_set_mask),
        ("ratio", pure.best_ratio_mask, None if jit is None else jit.best_ratio_mask),
    ]
    if jit is None:
        print("numba unavailable: timing the pure backend only", file=sys.stderr)
    else:
        # Warm-up compile on a tiny input.
        tiny = family("complete", [3])
        arr = np.array(tiny.adjacency_masks(), dtype=np.uint64)
        jit.max_independent_set_mask(arr, 3)
        jit.best_ratio_mask(arr, 3)

    header = f"{'kernel':<6} {'fixture':<16} {'pure':>12} {'numba':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, g in fixtures():
        adj = g.adjacency_masks()
        arr = np.array(adj, dtype=np.uint64) if jit is not None else None
        for kname, pure_fn, jit_fn in kernels:
            t_pure, r_pure = best_time(pure_fn, adj, g.n, repeat=args.repeat)
            if jit_fn is None:
                print(f"{kname:<6} {name:<16} {t_pure * 1e3:>10.2f}ms {'-':>12} {'-':>9}")
                continue
            t_jit, r_jit = best_time(jit_fn, arr, g.n, repeat=args.repeat)
            if tuple(int(x) for x in r_jit) != tuple(r_pure):
                print(f"BACKEND MISMATCH on {name}/{kname}: {r_pure} vs {r_jit}", file=sys.stderr)
                return 1
            speedup = t_pure / t_jit if t_jit > 0 else float("inf")
            print(
                f"{kname:<6} {name:<16} {t_pure * 1e3:>10.2f}ms {t_jit * 1e3:>10.2f}ms {speedup:>8.1f}x"
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
