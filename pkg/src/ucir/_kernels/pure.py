"""Pure-Python bitset kernels for the two exponential searches.

Masks are plain Python integers, so these kernels work at any vertex count.
Both kernels are written iteratively (explicit stacks) and mirror the jitted
versions in :mod:`ucir._kernels.jit` step for step, so the two backends
return identical witnesses.
"""

from __future__ import annotations

__all__ = ["max_independent_set_mask", "best_ratio_mask"]


def _clique_cover_bound(adj: tuple[int, ...], p: int) -> int:
    # Greedy partition of p into cliques; the number of cliques bounds the
    # independence number of the induced subgraph from above.
    cliques: list[int] = []
    rem = p
    while rem:
        low = rem & -rem
        v = low.bit_length() - 1
        rem ^= low
        row = adj[v]
        for i, c in enumerate(cliques):
            if c & ~row == 0:
                cliques[i] = c | low
                break
        else:
            cliques.append(low)
    return len(cliques)


def max_independent_set_mask(adj: tuple[int, ...], n: int) -> tuple[int, int]:
    """Exact maximum independent set by branch and bound.

    Returns ``(alpha, witness_mask)``.  Branching picks the vertex of highest
    degree inside the remaining candidate set (ties to the lowest index) and
    explores inclusion before exclusion; the witness only changes on a strict
    improvement, so the result is deterministic.  Correctness never depends on
    the clique-cover bound, only pruning does.
    """
    best_size = 0
    best_mask = 0
    full = (1 << n) - 1
    # Frames: (candidate mask, chosen mask, chosen size).
    stack: list[tuple[int, int, int]] = [(full, 0, 0)]
    while stack:
        p, cur, size = stack.pop()
        if size > best_size:
            best_size = size
            best_mask = cur
        if p == 0:
            continue
        if size + _clique_cover_bound(adj, p) <= best_size:
            continue
        branch = -1
        branch_deg = -1
        rem = p
        while rem:
            low = rem & -rem
            v = low.bit_length() - 1
            rem ^= low
            d = (adj[v] & p).bit_count()
            if d > branch_deg:
                branch_deg = d
                branch = v
        vbit = 1 << branch
        stack.append((p & ~vbit, cur, size))
        stack.append((p & ~(adj[branch] | vbit), cur | vbit, size + 1))
    return best_size, best_mask


def best_ratio_mask(adj: tuple[int, ...], n: int) -> tuple[int, int, int]:
    """Maximize ``|U| / (|U| + |N(U)|)`` over nonempty independent sets ``U``.

    Returns ``(numerator, denominator, witness_mask)`` with the numerator and
    denominator unreduced (``|U|`` and ``|U| + |N(U)|``).  Enumeration is a
    lexicographic DFS that extends a set only with vertices above its maximum
    index and outside its neighborhood; the witness is the first maximizer in
    that order.

    A subtree rooted at ``(U, R)`` is pruned when
    ``(|U|+|R|) / (|U|+|R|+|N(U)|) <= best``: every descendant has at most
    ``|U|+|R|`` members and at least ``|N(U)|`` neighbors, and ``t/(t+c)``
    is increasing in ``t``, so no descendant can beat the bound.
    """
    best_num = 0
    best_den = 1
    best_mask = 0
    full = (1 << n) - 1
    # Frames: (set mask, neighborhood mask, extension-candidate mask).
    stack: list[tuple[int, int, int]] = [(0, 0, full)]
    while stack:
        u, nbr, r = stack.pop()
        usize = u.bit_count()
        csize = nbr.bit_count()
        if u:
            den = usize + csize
            if usize * best_den > best_num * den:
                best_num = usize
                best_den = den
                best_mask = u
        t = usize + r.bit_count()
        if t == 0 or t * best_den <= best_num * (t + csize):
            continue
        # Push children in descending vertex order so they pop ascending.
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
    return best_num, best_den, best_mask
