"""Exact independence number, independence ratio, and independent-set enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import _kernels
from .graphs import Graph, VertexSet

__all__ = [
    "IndependenceResult",
    "max_independent_set",
    "independence_ratio",
    "for_each_independent_set",
]


@dataclass(frozen=True)
class IndependenceResult:
    """Independence number with an attaining set and the ratio alpha/n."""

    alpha: int
    witness: VertexSet
    ratio: Fraction


def max_independent_set(g: Graph) -> IndependenceResult:
    """Exact maximum independent set via branch and bound.

    The witness is deterministic for a fixed vertex order: branching is on the
    highest-degree candidate (ties to the lowest index), inclusion explored
    first, and the incumbent is replaced only on strict improvement.
    """
    alpha, mask = _kernels.max_independent_set_mask(g.adjacency_masks(), g.n)
    return IndependenceResult(
        alpha=alpha,
        witness=VertexSet.from_mask(g.n, mask),
        ratio=Fraction(alpha, g.n),
    )


def independence_ratio(g: Graph) -> Fraction:
    """alpha(G) / n as an exact rational in lowest terms."""
    alpha, _ = _kernels.max_independent_set_mask(g.adjacency_masks(), g.n)
    return Fraction(alpha, g.n)


Visitor = Callable[[VertexSet, VertexSet], object]


def for_each_independent_set(g: Graph, visitor: Visitor) -> int:
    """Visit every independent set of ``g`` (including the empty set) exactly once.

    The DFS extends a set only with vertices of index greater than its current
    maximum and outside its closed neighborhood, so each set appears once, in
    lexicographic order.  The visitor receives the current set and the
    candidate-extension set ``R`` (everything that may still be added in this
    subtree); returning ``False`` prunes the subtree.  Returns the number of
    sets visited.
    """
    adj = g.adjacency_masks()
    n = g.n
    full = (1 << n) - 1
    count = 0
    # Frames: (set mask, neighborhood mask, extension-candidate mask).
    stack: list[tuple[int, int, int]] = [(0, 0, full)]
    while stack:
        u, nbr, r = stack.pop()
        count += 1
        keep = visitor(VertexSet.from_mask(n, u), VertexSet.from_mask(n, r))
        if keep is False:
            continue
        bits: list[int] = []
        rem = r
        while rem:
            low = rem & -rem
            bits.append(low)
            rem ^= low
        for vbit in reversed(bits):
            v = vbit.bit_length() - 1
            above = full & ~((vbit << 1) - 1)
            stack.append((u | vbit, nbr | adj[v], r & above & ~adj[v]))
    return count
