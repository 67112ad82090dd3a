#!/usr/bin/env python3
"""Regenerate data/graphs{1..7}.g6: all isomorphism classes of simple graphs per order.

Classes on n vertices are built by augmentation: every class on n-1 vertices
is extended by one new vertex attached to each subset of the old vertices, and
candidates are deduplicated by their canonical code (the minimum, over all
vertex permutations, of the upper-triangle bit code in graph6 column order).
The expected class counts 1, 2, 4, 11, 34, 156, 1044 are asserted before
anything is written.

Usage: python scripts/make_corpora.py [--max-n 7] [--out-dir data]
"""

from __future__ import annotations

import argparse
import sys
from itertools import permutations
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ucir.graph6 import SMALL_GRAPH_CENSUS, encode_graph6
from ucir.graphs import build_graph


def _pair_positions(n: int) -> dict[tuple[int, int], int]:
    # graph6 column order: (0,1),(0,2),(1,2),(0,3),...
    pos = {}
    k = 0
    for j in range(1, n):
        for i in range(j):
            pos[(i, j)] = k
            k += 1
    return pos


def _perm_matrix(n: int) -> np.ndarray:
    """Row p, column k: the bit position that bit k moves to under permutation p."""
    pos = _pair_positions(n)
    nbits = len(pos)
    perms = list(permutations(range(n)))
    mat = np.empty((len(perms), nbits), dtype=np.int64)
    for r, perm in enumerate(perms):
        for (i, j), k in pos.items():
            a, b = perm[i], perm[j]
            mat[r, k] = pos[(a, b) if a < b else (b, a)]
    return mat


def canonical_codes(codes: np.ndarray, n: int) -> np.ndarray:
    """Canonical code of each graph code: min over all n! bit permutations."""
    if n == 1:
        return codes.copy()
    mat = _perm_matrix(n)
    nbits = n * (n - 1) // 2
    best = np.full(codes.shape, np.iinfo(np.int64).max, dtype=np.int64)
    for row in mat:
        permuted = np.zeros(codes.shape, dtype=np.int64)
        for k in range(nbits):
            permuted |= ((codes >> k) & 1) << row[k]
        np.minimum(best, permuted, out=best)
    return best


def classes_for_order(prev: np.ndarray, n: int) -> np.ndarray:
    """All canonical codes on n vertices from the canonical codes on n-1."""
    if n == 1:
        return np.array([0], dtype=np.int64)
    old_bits = (n - 1) * (n - 2) // 2
    subsets = np.arange(1 << (n - 1), dtype=np.int64)
    # New vertex n-1: its pair bits (i, n-1) occupy positions old_bits + i.
    candidates = (prev[:, None] | (subsets[None, :] << old_bits)).ravel()
    candidates = np.unique(candidates)
    return np.unique(canonical_codes(candidates, n))


def code_to_graph(code: int, n: int):
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (code >> k) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--out-dir", default=str(Path(__file__).resolve().parent.parent / "data"))
    args = parser.parse_args()
    if args.max_n > 7:
        parser.error("min-over-permutations canonicalization is desk-scale only up to n=7")

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    codes = np.array([0], dtype=np.int64)
    for n in range(1, args.max_n + 1):
        if n > 1:
            codes = classes_for_order(codes, n)
        expected = SMALL_GRAPH_CENSUS[n]
        if len(codes) != expected:
            raise AssertionError(f"n={n}: found {len(codes)} classes, census says {expected}")
        path = out_dir / f"graphs{n}.g6"
        with open(path, "w", newline="\n") as fh:
            for code in sorted(int(c) for c in codes):
                fh.write(encode_graph6(code_to_graph(code, n)) + "\n")
        print(f"n={n}: {len(codes)} graphs -> {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
