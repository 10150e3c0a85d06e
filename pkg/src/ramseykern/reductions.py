"""Clique -> Ramsey(k) and Ramsey(k) -> refinement Ramsey(k+1).

The input graph always keeps vertices ``0..n-1`` in the output, and added
structures follow it, so solutions map back by index arithmetic.
"""

from __future__ import annotations

from .constructions import Instance
from .graph import Graph, complete, disjoint_union, empty, join


def clique_to_ramsey(g: Graph, k: int) -> Instance:
    """Join ``g`` with K_{n+1}; ask for a homogeneous set of size k + n + 1.

    The added clique lifts omega by n + 1 while alpha stays at most n, so
    the answer matches whether ``g`` has a k-clique.
    """
    n = g.n
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range 1..{n}")
    return Instance(join(g, complete(n + 1)), k + n + 1)


def ramsey_to_refinement(g: Graph, k: int) -> Instance:
    """Add a (k-1)-clique C, then join an independent k-set I to everything.

    Layout: g (n vertices), C (k-1), I (k).  Returns the instance with
    parameter k+1 and its refinement witnesses: I itself, and C plus the
    first vertex of I.
    """
    if k < 3:
        raise ValueError(f"reduction assumes k >= 3, got {k}")
    n = g.n
    base = disjoint_union(g, complete(k - 1))
    g2 = join(base, empty(k))
    c = tuple(range(n, n + k - 1))
    i = tuple(range(n + k - 1, n + 2 * k - 1))
    return Instance(g2, k + 1, clique_witness=c + (i[0],), indep_witness=i)
