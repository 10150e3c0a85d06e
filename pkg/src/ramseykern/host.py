"""Host graphs: alpha, omega <= ell, every vertex in a homogeneous ell-set.

Three ways to obtain one:

* ``turan_complement_host`` -- ell disjoint ell-cliques, ell = ceil(sqrt t).
* ``witness_host`` -- greedy cover extraction from a known Ramsey witness.
* ``random_host`` -- rejection sampling of G(T, 1/2).

A failed search raises ``HostSearchError``; it never turns into an answer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .generators import disjoint_cliques, random_graph
from .graph import Graph, VertexSet, induced_subgraph
from .ramsey import RamseyTable, default_table, verify_ramsey_witness
from .solvers import has_homogeneous


class HostSearchError(RuntimeError):
    pass


@dataclass(frozen=True)
class HostGraph:
    h: Graph
    ell: int
    cover: tuple[VertexSet, ...]
    strategy: str = ""


def host_violations(host: HostGraph) -> list[str]:
    """Every violated host invariant, as human-readable lines."""
    h, ell = host.h, host.ell
    out = []
    if ell < 1:
        return [f"ell must be positive, got {ell}"]
    big = has_homogeneous(h, ell + 1)
    if big is not None:
        out.append(f"{big.kind} of size {ell + 1} exists: {list(big.members)}")
    covered = set()
    for i, s in enumerate(host.cover):
        if len(s) != ell or len(set(s)) != len(s):
            out.append(f"cover set {i} has {len(set(s))} distinct vertices, expected {ell}")
            continue
        if any(not 0 <= v < h.n for v in s):
            out.append(f"cover set {i} has out-of-range vertices")
            continue
        if not (h.is_clique(s) or h.is_independent(s)):
            out.append(f"cover set {i} {list(s)} is neither a clique nor an independent set")
        covered.update(s)
    missing = sorted(set(range(h.n)) - covered)
    if missing:
        out.append(f"vertices not covered: {missing}")
    return out


def validate_host(host: HostGraph) -> bool:
    return not host_violations(host)


def turan_complement_host(t: int) -> HostGraph:
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    ell = math.isqrt(t - 1) + 1
    h = disjoint_cliques(ell, ell)
    groups = [tuple(range(g * ell, (g + 1) * ell)) for g in range(ell)]
    cross = [tuple(g * ell + j for g in range(ell)) for j in range(ell)]
    cover = list(groups)
    for s in cross:
        if s not in cover:
            cover.append(s)
    return HostGraph(h, ell, tuple(cover), "turan")


def greedy_cover(h: Graph, ell: int, r_ell: Optional[int] = None) -> list[VertexSet]:
    """Peel homogeneous ell-sets off the uncovered vertices, lowest first.

    With ``r_ell`` (= R(ell)) known, peeling stops once fewer than R(ell)
    vertices are uncovered, and must never stall before that.  Without it,
    peeling runs until no homogeneous ell-set is left.
    """
    uncovered = list(range(h.n))
    sets = []
    while uncovered:
        if r_ell is not None and len(uncovered) < r_ell:
            break
        w = has_homogeneous(induced_subgraph(h, uncovered), ell)
        if w is None:
            if r_ell is not None:
                raise AssertionError(
                    f"no homogeneous {ell}-set among {len(uncovered)} >= R({ell}) = {r_ell} vertices")
            break
        s = tuple(sorted(uncovered[i] for i in w.members))
        sets.append(s)
        taken = set(s)
        uncovered = [v for v in uncovered if v not in taken]
    return sets


def prune_cover(sets: Sequence[VertexSet], t: int) -> list[VertexSet]:
    """Drop sets, latest first, while the union stays at least t.

    The result is minimal: removing any remaining set drops the union
    below t.
    """
    kept = list(sets)
    for i in range(len(kept) - 1, -1, -1):
        rest = kept[:i] + kept[i + 1:]
        if len(set().union(*rest)) >= t:
            kept = rest
    return kept


def _restrict(h: Graph, ell: int, sets: Sequence[VertexSet], strategy: str) -> HostGraph:
    verts = sorted(set().union(*sets))
    pos = {v: i for i, v in enumerate(verts)}
    cover = tuple(tuple(pos[v] for v in s) for s in sets)
    return HostGraph(induced_subgraph(h, verts), ell, cover, strategy)


def witness_host(t: int, ell: int, witness: Graph, table: RamseyTable | None = None) -> HostGraph:
    """Host on at least t vertices cut out of a graph with no homogeneous
    (ell+1)-set that has at least R(ell) + t vertices."""
    table = table or default_table()
    if t < 1 or ell < 1:
        raise ValueError(f"t and ell must be positive, got t={t}, ell={ell}")
    if ell not in table:
        raise ValueError(f"R({ell}) is not in the exact table")
    if not verify_ramsey_witness(witness, ell + 1):
        raise ValueError(f"witness has a clique or independent set of size {ell + 1}")
    need = table[ell] + t
    if witness.n < need:
        raise ValueError(f"witness has {witness.n} vertices, needs R({ell}) + t = {need}")
    sets = greedy_cover(witness, ell, table[ell])
    covered = len(set().union(*sets)) if sets else 0
    assert covered >= t, f"cover reached only {covered} < t={t} vertices"
    return _restrict(witness, ell, prune_cover(sets, t), "witness")


def random_host(t: int, ell: int, T: int, max_trials: int, seed: int,
                table: RamseyTable | None = None) -> HostGraph:
    """Sample G(T, 1/2) until one has no homogeneous (ell+1)-set and its
    greedy cover reaches t vertices.  Trial i uses the generator seeded
    with ``[seed, i]``; the lowest accepted trial wins."""
    table = table or default_table()
    if T < t:
        raise ValueError(f"T={T} must be at least t={t}")
    r_ell = table[ell] if ell in table else None
    for trial in range(max_trials):
        g = random_graph(T, 0.5, np.random.default_rng([seed, trial]))
        if not verify_ramsey_witness(g, ell + 1):
            continue
        sets = greedy_cover(g, ell, r_ell)
        if not sets or len(set().union(*sets)) < t:
            continue
        return _restrict(g, ell, prune_cover(sets, t), "random")
    raise HostSearchError(f"random host search failed: no valid host in {max_trials} trials "
                          f"(t={t}, ell={ell}, T={T}, seed={seed})")
