"""Immutable simple graphs stored as one adjacency bit row per vertex.

Row ``rows[u]`` is a Python int whose bit ``v`` is set iff ``u`` and ``v`` are
adjacent.  All combinators return new graphs; nothing mutates its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

VertexSet = tuple[int, ...]


def _iter_bits(x: int) -> Iterator[int]:
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for u, r in enumerate(self.rows):
            if r & ~full or r < 0:
                raise ValueError(f"row {u} has bits outside 0..{self.n - 1}")
            if (r >> u) & 1:
                raise ValueError(f"self-loop at vertex {u}")
            for v in _iter_bits(r):
                if not (self.rows[v] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> Graph:
        # skips validation; only for combinators that preserve the invariants
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", tuple(rows))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, rows)

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(_iter_bits(self.rows[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in ascending lexicographic order."""
        for u, r in enumerate(self.rows):
            for v in _iter_bits(r >> (u + 1)):
                yield u, u + 1 + v

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        mask = 0
        for v in vs:
            mask |= 1 << v
        return all((self.rows[v] | (1 << v)) & mask == mask for v in vs)

    def is_independent(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        mask = 0
        for v in vs:
            mask |= 1 << v
        return all(self.rows[v] & mask == 0 for v in vs)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, [full ^ (1 << v) for v in range(n)])


def empty(n: int) -> Graph:
    return Graph._trusted(n, [0] * n)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._trusted(g.n, [full ^ r ^ (1 << v) for v, r in enumerate(g.rows)])


def _combine(g1: Graph, g2: Graph, cross: bool) -> Graph:
    n1, n2 = g1.n, g2.n
    m1 = ((1 << n1) - 1) if cross else 0
    m2 = (((1 << n2) - 1) << n1) if cross else 0
    rows = [r | m2 for r in g1.rows]
    rows += [(r << n1) | m1 for r in g2.rows]
    return Graph._trusted(n1 + n2, rows)


def join(g1: Graph, g2: Graph) -> Graph:
    """Both graphs side by side plus every edge between them."""
    return _combine(g1, g2, cross=True)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    return _combine(g1, g2, cross=False)


def induced_subgraph(g: Graph, s: Sequence[int]) -> Graph:
    """Subgraph on ``s``; new vertex ``i`` is old vertex ``s[i]``."""
    s = list(s)
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    if len(set(s)) != len(s):
        raise ValueError("vertex set has repeated vertices")
    pos = {v: i for i, v in enumerate(s)}
    mask = 0
    for v in s:
        mask |= 1 << v
    rows = []
    for v in s:
        r = 0
        for u in _iter_bits(g.rows[v] & mask):
            r |= 1 << pos[u]
        rows.append(r)
    return Graph._trusted(len(s), rows)


def connect_by_pattern(blocks: Sequence[Graph], pattern: Graph) -> Graph:
    """Disjoint union of ``blocks``, with blocks ``u`` and ``v`` fully joined
    exactly when ``pattern`` has the edge ``uv``."""
    if len(blocks) != pattern.n:
        raise ValueError(f"pattern has {pattern.n} vertices but {len(blocks)} blocks given")
    offsets = []
    spans = []
    off = 0
    for b in blocks:
        offsets.append(off)
        spans.append(((1 << b.n) - 1) << off)
        off += b.n
    rows = []
    for u, b in enumerate(blocks):
        cross = 0
        for v in _iter_bits(pattern.rows[u]):
            cross |= spans[v]
        rows += [(r << offsets[u]) | cross for r in b.rows]
    return Graph._trusted(off, rows)


def block_offsets(blocks: Sequence[Graph]) -> list[tuple[int, int]]:
    """Half-open vertex interval of each block inside ``connect_by_pattern``."""
    out = []
    off = 0
    for b in blocks:
        out.append((off, off + b.n))
        off += b.n
    return out
