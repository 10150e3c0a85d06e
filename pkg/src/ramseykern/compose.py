"""Deterministic composition of t refinement instances into one instance.

The nondeterministic guesses (T, ell, host graph, cover) are replaced by an
explicit host strategy.  Where a bad guess would be answered with a blanket
"yes", this module raises instead, so the output is always equivalent to the
OR of the inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .constructions import EmbedResult, IllegalInstanceError, Instance, embed
from .generators import paley
from .graph import Graph
from .host import (
    HostGraph,
    HostSearchError,
    host_violations,
    random_host,
    turan_complement_host,
    witness_host,
)
from .ramsey import RamseyTable, default_table, find_gap
from .solvers import has_homogeneous

STRATEGIES = ("turan", "witness", "random")

# ell -> order of the Paley graph with no homogeneous (ell+1)-set
BUILTIN_WITNESSES = {2: 5, 3: 17}


def builtin_witness(ell: int) -> Graph:
    """Shipped Ramsey witness for level ell (re-verified wherever it is used)."""
    if ell not in BUILTIN_WITNESSES:
        raise HostSearchError(f"no built-in Ramsey witness for ell={ell}")
    return paley(BUILTIN_WITNESSES[ell])


@dataclass(frozen=True)
class ComposeOutput:
    strategy: str
    seed: int
    direct_answer: Optional[bool] = None
    result: Optional[EmbedResult] = None
    host: Optional[HostGraph] = None

    @property
    def is_direct(self) -> bool:
        return self.direct_answer is not None


def small_k_solve(instances: Sequence[Instance]) -> bool:
    """Decide the OR directly for k in {1, 2}: a k-homogeneous set exists
    iff the graph has at least k vertices."""
    ks = {inst.k for inst in instances}
    if len(ks) != 1:
        raise ValueError(f"instances have mixed k values {sorted(ks)}")
    k = ks.pop()
    if k >= 3:
        raise ValueError(f"direct solving is only for k < 3, got k={k}")
    return any(inst.g.n >= k for inst in instances)


def make_host(t: int, strategy: str, seed: int = 0, table: RamseyTable | None = None,
              max_trials: int = 1000, ell: Optional[int] = None, T: Optional[int] = None) -> HostGraph:
    """Host graph for t instances.  turan fixes T = ell^2; witness and random
    take (ell, T = R(ell) + t) from the smallest Ramsey gap in the table
    unless given explicitly."""
    table = table or default_table()
    if strategy == "turan":
        return turan_complement_host(t)
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    if ell is None:
        gap = find_gap(t, table)
        ell = gap.ell
        T = gap.T if T is None else T
    elif T is None:
        T = table[ell] + t if ell in table else t
    if strategy == "witness":
        return witness_host(t, ell, builtin_witness(ell), table)
    return random_host(t, ell, T, max_trials, seed, table)


def compose(instances: Sequence[Instance], strategy: str = "turan", seed: int = 0,
            table: RamseyTable | None = None, max_trials: int = 1000) -> ComposeOutput:
    if not instances:
        raise ValueError("compose needs at least one instance")
    ks = {inst.k for inst in instances}
    if len(ks) != 1:
        raise ValueError(f"instances have mixed k values {sorted(ks)}")
    k = ks.pop()
    if k < 3:
        return ComposeOutput(strategy, seed, direct_answer=small_k_solve(instances))
    for i, inst in enumerate(instances):
        problems = inst.refinement_problems()
        if problems:
            raise IllegalInstanceError(f"instance {i}: {'; '.join(problems)}")
    host = make_host(len(instances), strategy, seed, table, max_trials)
    problems = host_violations(host)
    if problems:
        raise HostSearchError(f"{strategy} host failed validation: {'; '.join(problems)}")
    return ComposeOutput(strategy, seed, result=embed(host, k, instances), host=host)


def decide(out: ComposeOutput) -> bool:
    """Answer of a composition output (exact solver on the composed graph)."""
    if out.is_direct:
        return bool(out.direct_answer)
    return has_homogeneous(out.result.g_prime, out.result.k_prime) is not None
