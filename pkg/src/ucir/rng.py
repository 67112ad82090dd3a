"""Deterministic 64-bit PRNG and the seeded samplers built on it.

The generator is splitmix64: state advances by the golden-ratio increment
0x9E3779B97F4A7C15 and each output is the finalized mix of the new state.
Every random choice in a verification campaign derives from one seed through
the samplers below, whose draw orders are fixed and documented, so campaigns
replay bit-for-bit across runs (and across reimplementations of splitmix64).
"""

from __future__ import annotations

from .graphs import Graph, VertexSet, build_graph

__all__ = ["SplitMix64", "random_graph", "random_maximal_independent_set"]

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 with the standard finalizer constants."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return (z ^ (z >> 31)) & _MASK64

    def below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound): one ``next_u64`` reduced modulo bound."""
        if bound < 1:
            raise ValueError(f"bound must be positive, got {bound}")
        return self.next_u64() % bound

    def shuffled(self, items: list) -> list:
        """Fisher-Yates copy; swaps run from the top index down, one draw each."""
        out = list(items)
        for i in range(len(out) - 1, 0, -1):
            j = self.below(i + 1)
            out[i], out[j] = out[j], out[i]
        return out


def random_graph(rng: SplitMix64, n: int) -> Graph:
    """Uniform random graph on ``n`` vertices: each pair is an edge with probability 1/2.

    Pairs are drawn in graph6 column order ((0,1),(0,2),(1,2),(0,3),...), one
    ``next_u64`` per pair, taking its low bit.
    """
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    edges = []
    for j in range(1, n):
        for i in range(j):
            if rng.next_u64() & 1:
                edges.append((i, j))
    return build_graph(n, edges)


def random_maximal_independent_set(rng: SplitMix64, g: Graph) -> VertexSet:
    """Greedy maximal independent set over a shuffled vertex order.

    Shuffles ``0..n-1`` (one Fisher-Yates pass) and takes each vertex in turn
    unless it is adjacent to an already-chosen one.  Always nonempty.
    """
    adj = g.adjacency_masks()
    chosen = 0
    blocked = 0
    for v in rng.shuffled(list(range(g.n))):
        bit = 1 << v
        if blocked & bit:
            continue
        chosen |= bit
        blocked |= bit | adj[v]
    return VertexSet.from_mask(g.n, chosen)
