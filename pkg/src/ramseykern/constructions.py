"""Instance embedding into a host graph.

Each instance ``(G, k)`` becomes a local graph
``(G join D) + (complement(G) join D)`` where the dummy ``D`` has clique and
independence number k-1, and the local graphs are wired together along the
host's edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional, Sequence

from .graph import (
    Graph,
    VertexSet,
    block_offsets,
    complement,
    complete,
    connect_by_pattern,
    disjoint_union,
    empty,
    join,
)

if TYPE_CHECKING:
    from .host import HostGraph


class IllegalInstanceError(ValueError):
    pass


@dataclass(frozen=True)
class Instance:
    """A Ramsey(k) instance, optionally carrying the refinement witnesses
    (a (k-1)-clique and a (k-1)-independent set)."""

    g: Graph
    k: int
    clique_witness: Optional[VertexSet] = None
    indep_witness: Optional[VertexSet] = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if (self.clique_witness is None) != (self.indep_witness is None):
            raise ValueError("give both refinement witnesses or neither")

    @property
    def has_witnesses(self) -> bool:
        return self.clique_witness is not None

    def refinement_problems(self) -> list[str]:
        """Reasons this is not a legal refinement instance (empty when legal)."""
        if not self.has_witnesses:
            return ["no refinement witnesses attached"]
        out = []
        for name, ws, check in (("clique", self.clique_witness, self.g.is_clique),
                                ("independent set", self.indep_witness, self.g.is_independent)):
            if len(ws) != self.k - 1 or len(set(ws)) != len(ws):
                out.append(f"{name} witness must have {self.k - 1} distinct vertices, has {list(ws)}")
            elif any(not 0 <= v < self.g.n for v in ws):
                out.append(f"{name} witness has out-of-range vertices {list(ws)}")
            elif not check(ws):
                out.append(f"{name} witness {list(ws)} is not a {name}")
        return out

    def is_legal_refinement(self) -> bool:
        return not self.refinement_problems()


@dataclass(frozen=True)
class EmbedResult:
    g_prime: Graph
    k_prime: int
    ell: int
    assignment: tuple[int, ...]
    block_ranges: tuple[tuple[int, int], ...]


def dummy_graph(c: int) -> Graph:
    """D_c: a (c-2)-clique joined to an independent set of size c-1.

    Both its clique and independence numbers equal c-1.
    """
    if c < 2:
        raise ValueError(f"dummy graph needs c >= 2, got {c}")
    return join(complete(c - 2), empty(c - 1))


def local_graph(inst: Instance) -> Graph:
    """Layout: G, D, complement(G), D with D = dummy_graph(k); 2(n + 2k - 3) vertices.

    D must have alpha = omega = k-1: then a legal no-instance yields
    alpha = omega = 2k-2 and a yes-instance lifts both to 2k-1.
    """
    if inst.k < 3:
        raise ValueError(f"local graph needs k >= 3, got {inst.k}")
    d = dummy_graph(inst.k)
    return disjoint_union(join(inst.g, d), join(complement(inst.g), d))


def embed(host: HostGraph, k: int, instances: Sequence[Instance]) -> EmbedResult:
    """Place instance ``v mod t`` at host vertex ``v`` and connect the local
    graphs according to the host adjacency."""
    t = len(instances)
    if t == 0:
        raise ValueError("embed needs at least one instance")
    if k < 3:
        raise ValueError(f"embed needs k >= 3, got {k}")
    if t > host.h.n:
        raise ValueError(f"{t} instances exceed host size {host.h.n}")
    for i, inst in enumerate(instances):
        if inst.k != k:
            raise ValueError(f"instance {i} has k={inst.k}, expected {k}")
    locals_ = [local_graph(inst) for inst in instances]
    assignment = tuple(v % t for v in range(host.h.n))
    blocks = [locals_[i] for i in assignment]
    g_prime = connect_by_pattern(blocks, host.h)
    return EmbedResult(
        g_prime=g_prime,
        k_prime=host.ell * (2 * k - 2) + 1,
        ell=host.ell,
        assignment=assignment,
        block_ranges=tuple(block_offsets(blocks)),
    )
