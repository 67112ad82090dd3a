"""The local independence ratio, its capped form, and the ultimate ratio.

For a nonempty independent set U of G write r(U) = |U| / (|U| + |N(U)|).
The *local independence ratio* is the maximum of r(U); the graph's *ultimate
independence ratio* (the limit of the independence ratios of its categorical
powers) equals that maximum when it is at most 1/2 and equals 1 otherwise.
All arithmetic is exact rational; no floating point enters these functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .graphs import Graph, VertexSet

__all__ = [
    "RatioSummary",
    "local_independence_ratio",
    "ultimate_independence_ratio",
    "expansion_from_ratio",
]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class RatioSummary:
    """All ratio invariants of one graph.

    ``local_ratio`` is max |U|/(|U|+|N(U)|) over nonempty independent U with a
    witness attaining it; ``capped_ratio`` is that value when it is <= 1/2 and
    1 otherwise; ``ultimate_ratio`` is the limit of the independence ratios of
    the categorical powers, which equals ``capped_ratio``; ``expansion`` is
    (1 - local)/local, the minimum of |N(U)|/|U|.
    """

    local_ratio: Fraction
    witness: VertexSet
    capped_ratio: Fraction
    ultimate_ratio: Fraction
    expansion: Fraction


def local_independence_ratio(g: Graph) -> tuple[Fraction, VertexSet]:
    """Maximize |U| / (|U| + |N(U)|) over all nonempty independent sets.

    Enumeration covers every nonempty independent set (maximizers need not be
    maximal: growing a set can dilute its ratio).  The witness is the first
    maximizer in lexicographic DFS order, making it deterministic; pruning
    never changes it because a subtree is cut only when it cannot strictly
    beat the incumbent.
    """
    num, den, mask = _kernels.best_ratio_mask(g.adjacency_masks(), g.n)
    return Fraction(num, den), VertexSet.from_mask(g.n, mask)


def expansion_from_ratio(ratio: Fraction) -> Fraction:
    """(1 - r) / r for a ratio in (0, 1].

    When r is the local independence ratio of a graph this equals the minimum
    of |N(U)|/|U| over nonempty independent sets; it is >= 1 iff r <= 1/2.
    """
    if not 0 < ratio <= 1:
        raise ValueError(f"ratio must lie in (0, 1], got {ratio}")
    return (1 - ratio) / ratio


def ultimate_independence_ratio(g: Graph) -> RatioSummary:
    """Compute the local ratio and apply the 1/2 case split to get the ultimate ratio."""
    local, witness = local_independence_ratio(g)
    capped = local if local <= HALF else Fraction(1)
    return RatioSummary(
        local_ratio=local,
        witness=witness,
        capped_ratio=capped,
        ultimate_ratio=capped,
        expansion=expansion_from_ratio(local),
    )
