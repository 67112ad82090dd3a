"""Brute-force reference implementations, kept independent of the fast kernels.

These scan all 2^n vertex subsets directly.  They exist as oracles: the
optimized solvers are required to agree with them, and the equivalence is
enforced by the test suite and by the ``verify fpm-oracle`` command.  Keep
them dumb; do not "improve" them with pruning.
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import Graph, VertexSet

__all__ = ["alpha_by_subset_scan", "best_ratio_by_subset_scan"]

_SCAN_LIMIT = 24


def _check_size(g: Graph) -> None:
    if g.n > _SCAN_LIMIT:
        raise ValueError(
            f"subset scan over 2^{g.n} sets refused (limit n <= {_SCAN_LIMIT})"
        )


def _is_independent_mask(adj: tuple[int, ...], mask: int) -> bool:
    rem = mask
    while rem:
        low = rem & -rem
        v = low.bit_length() - 1
        rem ^= low
        if adj[v] & mask:
            return False
    return True


def alpha_by_subset_scan(g: Graph) -> int:
    """Independence number by scanning all subsets."""
    _check_size(g)
    adj = g.adjacency_masks()
    best = 0
    for mask in range(1 << g.n):
        if mask.bit_count() > best and _is_independent_mask(adj, mask):
            best = mask.bit_count()
    return best


def best_ratio_by_subset_scan(g: Graph) -> tuple[Fraction, VertexSet]:
    """Maximum of |U| / (|U| + |N(U)|) over nonempty independent sets, by full scan.

    The witness is the first maximizer in increasing-mask order (an order of
    its own; only the value is comparable with the pruned solver).
    """
    _check_size(g)
    adj = g.adjacency_masks()
    best = Fraction(0)
    best_mask = 0
    for mask in range(1, 1 << g.n):
        if not _is_independent_mask(adj, mask):
            continue
        nbr = 0
        rem = mask
        while rem:
            low = rem & -rem
            nbr |= adj[low.bit_length() - 1]
            rem ^= low
        value = Fraction(mask.bit_count(), mask.bit_count() + nbr.bit_count())
        if value > best:
            best = value
            best_mask = mask
    return best, VertexSet.from_mask(g.n, best_mask)
