"""Bit-exact graph6 encoder/decoder and corpus ingestion.

graph6 encodes a simple graph as one printable ASCII line: a size prefix
followed by the upper-triangle adjacency bits in column order
(0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups, each group
offset by 63.  The size prefix is one byte ``n+63`` for n <= 62, ``~`` plus
three bytes for n <= 258047, and ``~~`` plus six bytes above that.  Trailing
pad bits must be zero; nonzero padding is treated as corruption, not noise.

Only graph6 is supported; sparse6/digraph6 lines are rejected with a clear
error.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator

from .graphs import Graph, build_graph

__all__ = [
    "Graph6Error",
    "decode_graph6",
    "encode_graph6",
    "read_corpus",
    "write_corpus",
    "SMALL_GRAPH_CENSUS",
    "assert_complete_census",
]

# Number of isomorphism classes of simple graphs on 1..7 vertices; used as an
# ingestion gate for corpora that claim to list all graphs of one order.
SMALL_GRAPH_CENSUS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}

_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the 1-based line number when known."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _check_chars(line: str) -> None:
    for ch in line:
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6Error(f"invalid character {ch!r} (code {code}) outside 63..126")


def _parse_size(line: str) -> tuple[int, int]:
    """Return (n, index of first data character)."""
    if line[0] != "~":
        return ord(line[0]) - 63, 1
    if len(line) >= 2 and line[1] == "~":
        if len(line) < 8:
            raise Graph6Error("truncated long size prefix")
        n = 0
        for ch in line[2:8]:
            n = (n << 6) | (ord(ch) - 63)
        return n, 8
    if len(line) < 4:
        raise Graph6Error("truncated size prefix")
    n = 0
    for ch in line[1:4]:
        n = (n << 6) | (ord(ch) - 63)
    return n, 4


def decode_graph6(line: str) -> Graph:
    """Decode one graph6 line into a :class:`Graph`."""
    line = line.rstrip("\r\n")
    if line.startswith(_HEADER):
        line = line[len(_HEADER):]
    if line.startswith(">>"):
        raise Graph6Error(f"unsupported format header in {line[:20]!r} (only graph6 is handled)")
    if not line:
        raise Graph6Error("empty line")
    if line[0] == ":" or line[0] == ";":
        raise Graph6Error("sparse6 input not supported (only graph6)")
    if line[0] == "&":
        raise Graph6Error("digraph6 input not supported (only graph6)")
    _check_chars(line)
    n, start = _parse_size(line)
    if n == 0:
        raise Graph6Error("graph on 0 vertices rejected")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    data = line[start:]
    if len(data) < nchars:
        raise Graph6Error(
            f"truncated bit vector: need {nchars} data characters for n={n}, got {len(data)}"
        )
    if len(data) > nchars:
        raise Graph6Error(
            f"trailing characters: expected {nchars} data characters for n={n}, got {len(data)}"
        )
    edges = []
    bit = 0
    i, j = 0, 1
    for ch in data:
        group = ord(ch) - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if (group >> k) & 1:
                    raise Graph6Error("nonzero padding bits")
                continue
            if (group >> k) & 1:
                edges.append((i, j))
            bit += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return build_graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode a graph as a canonical graph6 line (minimal size prefix)."""
    n = g.n
    if n <= 62:
        prefix = chr(n + 63)
    elif n <= 258047:
        prefix = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    elif n <= 68719476735:
        prefix = "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    else:
        raise ValueError(f"graph too large for graph6: n={n}")
    out = [prefix]
    group = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            group = (group << 1) | (1 if g.has_edge(i, j) else 0)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group, filled = 0, 0
    if filled:
        group <<= 6 - filled
        out.append(chr(group + 63))
    return "".join(out)


def read_corpus(
    lines: Iterable[str],
    on_error: Callable[[int, Graph6Error], None] | None = None,
) -> Iterator[tuple[int, Graph]]:
    """Lazily decode a stream of graph6 lines, yielding ``(line number, graph)``.

    Blank lines and a leading ``>>graph6<<`` header are skipped.  Decode errors
    raise by default (fail-fast); pass ``on_error`` to be notified instead and
    keep scanning (skip mode).
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if line.startswith(_HEADER):
            line = line[len(_HEADER):]
        if not line.strip():
            continue
        try:
            yield lineno, decode_graph6(line)
        except Graph6Error as exc:
            err = Graph6Error(str(exc), lineno) if exc.lineno is None else exc
            if on_error is None:
                raise err from None
            on_error(lineno, err)


def write_corpus(graphs: Iterable[Graph], path: str) -> int:
    """Write graphs as one .g6 line each (LF endings). Returns the line count."""
    count = 0
    with open(path, "w", newline="\n") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")
            count += 1
    return count


def assert_complete_census(graphs: list[Graph], n: int) -> None:
    """Sanity gate for corpora claiming to hold all graphs on ``n`` vertices.

    Checks the count against the known census and that every member has the
    right order.  Only defined for n = 1..7.
    """
    if n not in SMALL_GRAPH_CENSUS:
        raise ValueError(f"census known only for 1..7 vertices, got n={n}")
    expected = SMALL_GRAPH_CENSUS[n]
    if len(graphs) != expected:
        raise ValueError(
            f"corpus for n={n} has {len(graphs)} graphs, census expects {expected}"
        )
    for g in graphs:
        if g.n != n:
            raise ValueError(f"corpus for n={n} contains a graph on {g.n} vertices")
