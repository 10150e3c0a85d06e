"""Exact maximum clique / independent set and the homogeneous-set decision.

``max_clique`` is a branch and bound over bitset candidate sets with a greedy
coloring bound (vertices pre-ordered by descending degree).  The kernel is the
compiled extension when available; see ``_backend``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Optional

from ._backend import kernels
from .graph import Graph, VertexSet, complement

CLIQUE = "clique"
INDEPENDENT = "independent-set"
Kind = Literal["clique", "independent-set"]


@dataclass(frozen=True)
class HomogeneousWitness:
    kind: Kind
    members: VertexSet

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def certifies(self, g: Graph) -> bool:
        """True iff ``members`` really is a clique / independent set of ``g``."""
        if any(not 0 <= v < g.n for v in self.members) or len(set(self.members)) != len(self.members):
            return False
        if self.kind == CLIQUE:
            return g.is_clique(self.members)
        return g.is_independent(self.members)


def max_clique(g: Graph) -> HomogeneousWitness:
    """A maximum clique of ``g``; the empty witness when ``g`` has no vertices.

    The witness is the first maximum clique met in the solver's fixed
    branching order, so repeated calls return the same set.
    """
    return HomogeneousWitness(CLIQUE, tuple(kernels.max_clique(list(g.rows))))


def max_independent_set(g: Graph) -> HomogeneousWitness:
    w = kernels.max_clique(list(complement(g).rows))
    return HomogeneousWitness(INDEPENDENT, tuple(w))


def clique_number(g: Graph) -> int:
    return max_clique(g).size


def independence_number(g: Graph) -> int:
    return max_independent_set(g).size


def homogeneous_number(g: Graph) -> int:
    """max(alpha(g), omega(g))."""
    return max(clique_number(g), independence_number(g))


def _find(rows: list[int], k: int) -> Optional[tuple[int, ...]]:
    found = kernels.max_clique(rows, k - 1, k)
    if len(found) >= k:
        return tuple(sorted(found)[:k])
    return None


def has_homogeneous(g: Graph, k: int, mode: str = "either") -> Optional[HomogeneousWitness]:
    """A clique or independent set of exactly ``k`` vertices, or None.

    ``mode`` restricts the search to ``"clique"`` or ``"indep"``; cliques are
    tried first under ``"either"``.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if mode not in ("either", "clique", "indep"):
        raise ValueError(f"unknown mode {mode!r}")
    if k > g.n:
        return None
    if mode in ("either", "clique"):
        s = _find(list(g.rows), k)
        if s is not None:
            return HomogeneousWitness(CLIQUE, s)
    if mode in ("either", "indep"):
        s = _find(list(complement(g).rows), k)
        if s is not None:
            return HomogeneousWitness(INDEPENDENT, s)
    return None


BRUTE_FORCE_MAX_N = 30


def brute_force_homogeneous(g: Graph, k: int, allow_large: bool = False) -> Optional[HomogeneousWitness]:
    """Reference oracle: try every k-subset in lexicographic order.

    Deliberately shares no code with the branch and bound.  Refuses graphs
    with more than ``BRUTE_FORCE_MAX_N`` vertices unless ``allow_large``.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if g.n > BRUTE_FORCE_MAX_N and not allow_large:
        raise ValueError(f"brute force refused for n={g.n} > {BRUTE_FORCE_MAX_N}; pass allow_large=True")
    adj = [[g.has_edge(u, v) for v in range(g.n)] for u in range(g.n)]
    for s in combinations(range(g.n), k):
        pairs = [adj[u][v] for u, v in combinations(s, 2)]
        if all(pairs):
            return HomogeneousWitness(CLIQUE, s)
        if not any(pairs):
            return HomogeneousWitness(INDEPENDENT, s)
    return None


def brute_force_homogeneous_number(g: Graph) -> int:
    """max(alpha, omega) by growing k with the brute-force oracle."""
    k = 0
    while k < g.n and brute_force_homogeneous(g, k + 1, allow_large=True) is not None:
        k += 1
    return k
