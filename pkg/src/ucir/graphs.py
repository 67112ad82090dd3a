"""Finite simple graphs: construction, set operations, products and named families.

Graphs are immutable. Vertices are the integers ``0..n-1`` and adjacency is
stored as one bitmask per vertex (bit ``j`` of ``adj[i]`` set iff ``i ~ j``),
which keeps the enumeration kernels and the set algebra cheap.

Vertex numbering of a categorical product is row-major: the pair ``(x, y)``
with ``x`` in the left factor and ``y`` in the right factor becomes the
product vertex ``x * n_right + y``.  This encoding is fixed so that witness
sets reported by the solvers are reproducible across runs and platforms.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "VertexSet",
    "ProductVertexMap",
    "VertexCapExceeded",
    "build_graph",
    "neighborhood",
    "is_independent",
    "categorical_product",
    "categorical_power",
    "disjoint_union",
    "family",
    "family_names",
    "vertex_cap",
]

DEFAULT_VERTEX_CAP = 4096
VERTEX_CAP_ENV = "UCIR_VERTEX_CAP"


class VertexCapExceeded(ValueError):
    """A product or power would exceed the configured vertex cap."""


def vertex_cap() -> int:
    """Current product-size guard, overridable via ``UCIR_VERTEX_CAP``."""
    raw = os.environ.get(VERTEX_CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_VERTEX_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{VERTEX_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"{VERTEX_CAP_ENV} must be positive, got {cap}")
    return cap


@dataclass(frozen=True)
class VertexSet:
    """An immutable subset of the vertices of a graph on ``count`` vertices.

    The owner is identified only by its vertex count; operations between sets
    with different counts are rejected.
    """

    count: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.count}")
        if not isinstance(self.members, frozenset):
            object.__setattr__(self, "members", frozenset(self.members))
        for v in self.members:
            if not (0 <= v < self.count):
                raise ValueError(f"vertex {v} out of range 0..{self.count - 1}")

    @classmethod
    def of(cls, count: int, members: Iterable[int] = ()) -> "VertexSet":
        return cls(count, frozenset(members))

    @classmethod
    def from_mask(cls, count: int, mask: int) -> "VertexSet":
        members = []
        while mask:
            low = mask & -mask
            members.append(low.bit_length() - 1)
            mask ^= low
        return cls(count, frozenset(members))

    def to_mask(self) -> int:
        mask = 0
        for v in self.members:
            mask |= 1 << v
        return mask

    def _check_same_owner(self, other: "VertexSet") -> None:
        if self.count != other.count:
            raise ValueError(
                f"vertex sets belong to different graphs ({self.count} vs {other.count} vertices)"
            )

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_same_owner(other)
        return VertexSet(self.count, self.members | other.members)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_same_owner(other)
        return VertexSet(self.count, self.members & other.members)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_same_owner(other)
        return VertexSet(self.count, self.members - other.members)

    def __le__(self, other: "VertexSet") -> bool:
        self._check_same_owner(other)
        return self.members <= other.members

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check_same_owner(other)
        return self.members.isdisjoint(other.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def __repr__(self) -> str:
        return f"VertexSet({self.count}, {{{', '.join(map(str, self.sorted()))}}})"


class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; build them with :func:`build_graph` or the
    product/union constructors below.
    """

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        # Internal constructor: callers must supply a symmetric, irreflexive
        # adjacency.  Public construction goes through build_graph().
        self.n = n
        self._adj = adj

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self._adj) // 2

    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks (bit ``j`` of entry ``i`` iff ``i ~ j``)."""
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return VertexSet.from_mask(self.n, self._adj[v]).sorted()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted pairs, in lexicographic order."""
        out = []
        for u in range(self.n):
            row = self._adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    def full_set(self) -> VertexSet:
        return VertexSet.from_mask(self.n, (1 << self.n) - 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph from a vertex count and an edge list.

    Edges are symmetrized and deduplicated.  Loops, out-of-range endpoints and
    ``n == 0`` are rejected.
    """
    if n < 1:
        raise ValueError(f"graph must have at least one vertex, got n={n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop ({u}, {v}) not allowed in a simple graph")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _check_owner(g: Graph, u: VertexSet) -> None:
    if u.count != g.n:
        raise ValueError(
            f"vertex set over {u.count} vertices does not match graph on {g.n} vertices"
        )


def neighborhood(g: Graph, u: VertexSet) -> VertexSet:
    """The open neighborhood: all vertices with at least one neighbor in ``u``.

    For an independent ``u`` the result is disjoint from ``u``.
    """
    _check_owner(g, u)
    mask = 0
    for v in u.members:
        mask |= g._adj[v]
    return VertexSet.from_mask(g.n, mask)


def is_independent(g: Graph, u: VertexSet) -> bool:
    """True iff no edge of ``g`` has both endpoints in ``u``."""
    _check_owner(g, u)
    seen = 0
    for v in u.members:
        seen |= 1 << v
    for v in u.members:
        if g._adj[v] & seen:
            return False
    return True


@dataclass(frozen=True)
class ProductVertexMap:
    """Row-major bijection between pairs ``(x, y)`` and ``0..n_left*n_right-1``."""

    n_left: int
    n_right: int

    def encode(self, x: int, y: int) -> int:
        if not (0 <= x < self.n_left and 0 <= y < self.n_right):
            raise ValueError(f"pair ({x}, {y}) out of range")
        return x * self.n_right + y

    def decode(self, v: int) -> tuple[int, int]:
        if not (0 <= v < self.n_left * self.n_right):
            raise ValueError(f"product vertex {v} out of range")
        return divmod(v, self.n_right)

    @property
    def size(self) -> int:
        return self.n_left * self.n_right


def categorical_product(g: Graph, h: Graph) -> Graph:
    """Categorical (tensor) product: ``(x1,y1) ~ (x2,y2)`` iff both coordinates are adjacent.

    Raises :class:`VertexCapExceeded` when the product would exceed
    :func:`vertex_cap` vertices.
    """
    cap = vertex_cap()
    size = g.n * h.n
    if size > cap:
        raise VertexCapExceeded(
            f"product on {size} vertices exceeds the cap of {cap} "
            f"(override with {VERTEX_CAP_ENV})"
        )
    pmap = ProductVertexMap(g.n, h.n)
    nh = h.n
    adj = [0] * size
    for x in range(g.n):
        grow = g._adj[x]
        if not grow:
            continue
        for y in range(h.n):
            hrow = h._adj[y]
            if not hrow:
                continue
            mask = 0
            xs = grow
            while xs:
                low = xs & -xs
                x2 = low.bit_length() - 1
                xs ^= low
                mask |= hrow << (x2 * nh)
            adj[pmap.encode(x, y)] = mask
    return Graph(size, tuple(adj))


def categorical_power(g: Graph, k: int) -> Graph:
    """The ``k``-fold categorical product of ``g`` with itself (left fold).

    ``k == 1`` returns an identical copy; ``k == 0`` is rejected.
    """
    if k < 1:
        raise ValueError(f"power must be at least 1, got k={k}")
    result = Graph(g.n, g._adj)
    for _ in range(k - 1):
        result = categorical_product(result, g)
    return result


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union, with the vertices of ``h`` shifted up by ``g.n``."""
    n = g.n + h.n
    adj = list(g._adj) + [0] * h.n
    for v in range(h.n):
        adj[g.n + v] = h._adj[v] << g.n
    return Graph(n, tuple(adj))


def _complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def _path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def _star(leaves: int) -> Graph:
    if leaves < 1:
        raise ValueError(f"star needs at least 1 leaf, got {leaves}")
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _complete_multipartite(sizes: Sequence[int]) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError(f"part sizes must be positive, got {list(sizes)}")
    n = sum(sizes)
    starts = []
    acc = 0
    for s in sizes:
        starts.append(acc)
        acc += s
    edges = []
    for a in range(len(sizes)):
        for b in range(a + 1, len(sizes)):
            for u in range(starts[a], starts[a] + sizes[a]):
                for v in range(starts[b], starts[b] + sizes[b]):
                    edges.append((u, v))
    return build_graph(n, edges)


def _petersen() -> Graph:
    # Outer 5-cycle 0..4, inner pentagram 5..9 (5+i ~ 5+(i+2 mod 5)), spokes i ~ i+5.
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return build_graph(10, edges)


def _edgeless(n: int) -> Graph:
    return build_graph(n, [])


_FAMILIES = {
    "complete": (1, 1, lambda p: _complete(p[0])),
    "cycle": (1, 1, lambda p: _cycle(p[0])),
    "path": (1, 1, lambda p: _path(p[0])),
    "star": (1, 1, lambda p: _star(p[0])),
    "complete_multipartite": (1, None, _complete_multipartite),
    "petersen": (0, 0, lambda p: _petersen()),
    "edgeless": (1, 1, lambda p: _edgeless(p[0])),
}


def family_names() -> list[str]:
    return sorted(_FAMILIES)


def family(name: str, params: Sequence[int] = ()) -> Graph:
    """Named fixture graphs with a documented canonical vertex numbering.

    - ``complete [n]``: vertices 0..n-1, all pairs adjacent.
    - ``cycle [n]`` (n >= 3): ``i ~ i+1 mod n``.
    - ``path [n]`` (n >= 1): ``i ~ i+1``.
    - ``star [k]`` (k >= 1): center 0, leaves 1..k.
    - ``complete_multipartite [s1, s2, ...]``: parts numbered consecutively in
      the given order, edges exactly between different parts.
    - ``petersen []``: outer cycle 0..4, inner pentagram 5..9, spokes ``i ~ i+5``.
    - ``edgeless [n]``: n isolated vertices.
    """
    if name not in _FAMILIES:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(family_names())}")
    lo, hi, builder = _FAMILIES[name]
    params = list(params)
    if len(params) < lo or (hi is not None and len(params) > hi):
        raise ValueError(f"family {name!r} takes {lo}{'' if hi == lo else '+'} parameter(s), got {params}")
    if any(p < 1 for p in params):
        raise ValueError(f"family parameters must be positive, got {params}")
    return builder(params)
