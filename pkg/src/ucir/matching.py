"""Bipartite structure, maximum matching, and the fractional-matching decision.

A graph has a fractional perfect matching (nonnegative edge weights summing to
one at every vertex) iff its bipartite double cover has a perfect matching:
half-integral optimal solutions turn odd cycles into alternating cycles of the
cover.  That classical reduction makes the decision purely combinatorial, so
the test "is the local independence ratio at most 1/2" (equivalently, "is the
ultimate ratio 1 or at most 1/2") runs in polynomial time, with no LP solver.
The test suite enforces agreement with the brute-force definition.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, VertexSet, build_graph

__all__ = [
    "Bipartition",
    "Matching",
    "is_bipartite",
    "max_bipartite_matching",
    "bipartite_double_cover",
    "has_fractional_perfect_matching",
    "bipartite_ultimate_ratio",
]


@dataclass(frozen=True)
class Bipartition:
    """A 2-coloring: ``left`` and ``right`` partition the vertices, all edges cross."""

    left: VertexSet
    right: VertexSet


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges, each stored as a sorted pair."""

    pairs: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.pairs)

    def covered(self) -> set[int]:
        out: set[int] = set()
        for u, v in self.pairs:
            out.add(u)
            out.add(v)
        return out


def is_bipartite(g: Graph) -> Bipartition | None:
    """BFS 2-coloring, or ``None`` when an odd cycle exists.

    Components are rooted at their lowest-index vertex and roots are colored
    left, so the returned partition is deterministic.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    left = frozenset(v for v in range(g.n) if color[v] == 0)
    right = frozenset(v for v in range(g.n) if color[v] == 1)
    return Bipartition(VertexSet(g.n, left), VertexSet(g.n, right))


def _validate_bipartition(g: Graph, p: Bipartition) -> None:
    if p.left.count != g.n or p.right.count != g.n:
        raise ValueError("bipartition does not belong to this graph")
    if p.left.members & p.right.members or len(p.left) + len(p.right) != g.n:
        raise ValueError("left and right do not partition the vertex set")
    for u, v in g.edges():
        if (u in p.left.members) == (v in p.left.members):
            raise ValueError(f"edge ({u}, {v}) does not cross the bipartition")


_INF = -1


def max_bipartite_matching(g: Graph, p: Bipartition) -> Matching:
    """Maximum-cardinality matching by Hopcroft-Karp, O(E sqrt(V)).

    All scans (free vertices, adjacency, layering) run in increasing vertex
    order, so the matching is deterministic for a fixed vertex numbering.
    """
    _validate_bipartition(g, p)
    left = p.left.sorted()
    pair: list[int] = [-1] * g.n  # both sides share the array
    dist: dict[int, int] = {}

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in left:
            if pair[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        reachable_free = False
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                w = pair[v]
                if w == -1:
                    reachable_free = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return reachable_free

    def dfs(root: int) -> bool:
        # Iterative alternating-path search (augmenting paths can span the
        # whole graph, so recursion is off the table).  via[i] is the right
        # vertex used to step from stack[i] to stack[i + 1].
        stack = [root]
        iters = [iter(g.neighbors(root))]
        via: list[int] = []
        while stack:
            u = stack[-1]
            descended = False
            for v in iters[-1]:
                w = pair[v]
                if w == -1:
                    pair[u] = v
                    pair[v] = u
                    for i in range(len(via) - 1, -1, -1):
                        pair[stack[i]] = via[i]
                        pair[via[i]] = stack[i]
                    return True
                if dist[w] == dist[u] + 1:
                    via.append(v)
                    stack.append(w)
                    iters.append(iter(g.neighbors(w)))
                    descended = True
                    break
            if not descended:
                dist[u] = _INF
                stack.pop()
                iters.pop()
                if via:
                    via.pop()
        return False

    while bfs():
        for u in left:
            if pair[u] == -1:
                dfs(u)
    pairs = frozenset(
        (u, pair[u]) if u < pair[u] else (pair[u], u) for u in left if pair[u] != -1
    )
    return Matching(pairs)


def bipartite_double_cover(g: Graph) -> tuple[Graph, Bipartition]:
    """Two copies of the vertex set, edges crossing copies along the original edges.

    Vertex ``v`` of the base becomes ``v`` (copy 0) and ``n + v`` (copy 1);
    every base edge {u, w} yields {u, n+w} and {w, n+u}.  The result equals
    the categorical product with a single edge, re-encoded so copy 0 occupies
    0..n-1.
    """
    n = g.n
    edges = []
    for u, w in g.edges():
        edges.append((u, n + w))
        edges.append((w, n + u))
    cover = build_graph(2 * n, edges)
    part = Bipartition(
        VertexSet(2 * n, frozenset(range(n))),
        VertexSet(2 * n, frozenset(range(n, 2 * n))),
    )
    return cover, part


def has_fractional_perfect_matching(g: Graph) -> bool:
    """True iff the bipartite double cover has a perfect matching.

    Equivalent to the existence of nonnegative edge weights with total weight
    one at every vertex, and thereby to the local independence ratio being at
    most 1/2.
    """
    cover, part = bipartite_double_cover(g)
    return len(max_bipartite_matching(cover, part)) == g.n


def bipartite_ultimate_ratio(g: Graph, p: Bipartition) -> Fraction:
    """Ultimate independence ratio of a bipartite graph via matching.

    1/2 when a perfect matching exists, 1 otherwise.  Must agree with
    :func:`ucir.ratios.ultimate_independence_ratio` on every bipartite input;
    the test suite enforces this.
    """
    matching = max_bipartite_matching(g, p)
    if 2 * len(matching) == g.n:
        return Fraction(1, 2)
    return Fraction(1)
