"""Named graph families and seeded random graphs."""

from __future__ import annotations

import numpy as np

from .graph import Graph, complete, disjoint_union, empty


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def paley(q: int) -> Graph:
    """Paley graph on Z_q: ``u ~ v`` iff ``u - v`` is a nonzero square mod q.

    Requires a prime ``q = 1 (mod 4)`` so that -1 is a square and the
    relation is symmetric.
    """
    if not _is_prime(q) or q % 4 != 1:
        raise ValueError(f"Paley graph needs a prime q = 1 mod 4, got {q}")
    squares = {(x * x) % q for x in range(1, q)}
    return Graph.from_edges(q, [(u, v) for u in range(q) for v in range(u + 1, q)
                                if (v - u) % q in squares])


def disjoint_cliques(groups: int, size: int) -> Graph:
    """``groups`` disjoint copies of K_size (complement of the Turán graph)."""
    g = empty(0)
    for _ in range(groups):
        g = disjoint_union(g, complete(size))
    return g


def random_graph(n: int, p: float = 0.5, rng: np.random.Generator | int | None = None) -> Graph:
    """G(n, p): each of the C(n,2) pairs is an edge independently with probability p.

    Pairs are drawn in lexicographic order, so a fixed seed reproduces the
    same graph.
    """
    rng = np.random.default_rng(rng)
    coins = rng.random(n * (n - 1) // 2) < p
    edges = []
    i = 0
    for u in range(n):
        for v in range(u + 1, n):
            if coins[i]:
                edges.append((u, v))
            i += 1
    return Graph.from_edges(n, edges)
