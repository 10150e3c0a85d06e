"""Instance generation and end-to-end verification of the composition.

Every check compares two independently computed answers: the OR of the
inputs (brute-force oracle on the small instances) and the decision on the
composed graph (exact solver).
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

import numpy as np

from .compose import compose, decide, make_host
from .constructions import Instance, local_graph
from .generators import random_graph
from .graph import Graph
from .ramsey import TableInsufficientError, default_table
from .host import HostSearchError
from .solvers import (
    brute_force_homogeneous,
    has_homogeneous,
    homogeneous_number,
    max_clique,
    max_independent_set,
)


class RetryBudgetError(RuntimeError):
    pass


def default_instance_order(k: int) -> int:
    """Instance size used by the harness: k + 2 (5 for k=3, 6 for k=4)."""
    return k + 2


def _plant(g: Graph, vs: Sequence[int], clique: bool) -> Graph:
    rows = list(g.rows)
    mask = 0
    for v in vs:
        mask |= 1 << v
    for v in vs:
        if clique:
            rows[v] |= mask & ~(1 << v)
        else:
            rows[v] &= ~mask
    return Graph(g.n, tuple(rows))


def gen_refinement_instance(n: int, k: int, target: str, seed, max_retries: int = 2000) -> Instance:
    """Random legal refinement instance with a certified answer.

    ``target="no"``: rejection-sampled G(n, 1/2) with max(alpha, omega) = k-1
    exactly; after half the budget, a K_{k-1} and an I_{k-1} are planted on
    disjoint vertex blocks before testing.  ``target="yes"``: a homogeneous
    k-set is planted on random vertices.  Both answers are re-certified by
    the brute-force oracle.
    """
    if k < 3:
        raise ValueError(f"refinement instances need k >= 3, got {k}")
    if target not in ("yes", "no"):
        raise ValueError(f"target must be 'yes' or 'no', got {target!r}")
    if n < 2 * k - 3:
        raise RetryBudgetError(
            f"no {n}-vertex graph has both a {k - 1}-clique and a {k - 1}-independent set")
    if target == "yes" and n < k:
        raise RetryBudgetError(f"a {n}-vertex graph cannot contain a homogeneous {k}-set")
    table = default_table()
    if target == "no" and k in table and n >= table[k]:
        raise RetryBudgetError(f"every graph on n={n} >= R({k})={table[k]} vertices is a yes-instance")
    rng = np.random.default_rng(seed)
    for attempt in range(max_retries):
        g = random_graph(n, 0.5, rng)
        if target == "yes":
            vs = sorted(int(v) for v in rng.choice(n, size=k, replace=False))
            g = _plant(g, vs, clique=bool(rng.integers(2)))
        elif attempt >= max_retries // 2 and n >= 2 * k - 2:
            g = _plant(g, range(k - 1), clique=True)
            g = _plant(g, range(k - 1, 2 * k - 2), clique=False)
        c = max_clique(g)
        i = max_independent_set(g)
        if c.size < k - 1 or i.size < k - 1:
            continue
        if target == "no" and max(c.size, i.size) != k - 1:
            continue
        inst = Instance(g, k, c.members[:k - 1], i.members[:k - 1])
        assert inst.is_legal_refinement()
        assert (brute_force_homogeneous(g, k) is not None) == (target == "yes")
        return inst
    raise RetryBudgetError(f"retry budget of {max_retries} exhausted for n={n}, k={k}, target={target}")


@dataclass
class TrialRecord:
    trial: int
    stratum: str
    t: int
    k: int
    strategy: str
    seed: int
    yes_inputs: int
    input_or: bool
    composed: bool
    k_prime: int
    ell: int
    vertices: int
    max_homogeneous: Optional[int]
    passed: bool


@dataclass
class VerificationReport:
    t: int
    k: int
    strategy: str
    seed: int
    records: list[TrialRecord] = field(default_factory=list)
    wall_times: list[float] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.records)

    @property
    def failed(self) -> int:
        return len(self.records) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self, timings: bool = False) -> dict:
        d = {
            "t": self.t, "k": self.k, "strategy": self.strategy, "seed": self.seed,
            "passed": self.passed, "failed": self.failed,
            "records": [asdict(r) for r in sorted(self.records, key=lambda r: r.trial)],
        }
        if timings:
            d["wall_times"] = self.wall_times
        return d

    def to_json(self, timings: bool = False) -> str:
        # timings are excluded by default so fixed seeds give byte-identical reports
        return json.dumps(self.to_dict(timings), indent=2, sort_keys=True) + "\n"


STRATA = ("all-no", "one-yes", "mixed")


def verify_composition(t: int, k: int, strategy: str, trials: int, seed: int,
                       n: Optional[int] = None, max_vertices: int = 80) -> VerificationReport:
    """Compose random yes/no mixes and compare the composed answer with the
    OR of the inputs.  Trials cycle through the strata all-no, exactly one
    yes, and an independent 1/2 mix; all-no trials must also hit
    max(alpha, omega) = ell(2k-2) exactly."""
    n = n or default_instance_order(k)
    report = VerificationReport(t, k, strategy, seed)
    for trial in range(trials):
        start = time.perf_counter()
        rng = np.random.default_rng([seed, trial])
        stratum = STRATA[trial % 3]
        if stratum == "all-no":
            yes = [False] * t
        elif stratum == "one-yes":
            yes = [False] * t
            yes[int(rng.integers(t))] = True
        else:
            yes = [bool(b) for b in rng.integers(2, size=t)]
        insts = [gen_refinement_instance(n, k, "yes" if y else "no", [seed, trial, i])
                 for i, y in enumerate(yes)]
        input_or = any(brute_force_homogeneous(inst.g, k) is not None for inst in insts)
        out = compose(insts, strategy, seed=int(rng.integers(2**63)))
        res = out.result
        if res.g_prime.n > max_vertices:
            raise ValueError(f"composed graph has {res.g_prime.n} vertices, above the cap {max_vertices}")
        composed = decide(out)
        max_hom = None
        ok = composed == input_or
        if stratum == "all-no":
            max_hom = homogeneous_number(res.g_prime)
            ok = ok and max_hom == res.ell * (2 * k - 2)
        report.records.append(TrialRecord(
            trial, stratum, t, k, strategy, seed, sum(yes), input_or, composed,
            res.k_prime, res.ell, res.g_prime.n, max_hom, ok))
        report.wall_times.append(time.perf_counter() - start)
    return report


@dataclass
class SharpnessResult:
    t: int
    k: int
    strategy: str
    seed: int
    ell: int
    k_prime: int
    vertices: int
    all_no_max: int
    flips_reaching_k_prime: int

    @property
    def ok(self) -> bool:
        return (self.all_no_max == self.ell * (2 * self.k - 2)
                and self.flips_reaching_k_prime == self.t)


def lemma4_sharpness(t: int, k: int, strategy: str, seed: int, n: Optional[int] = None) -> SharpnessResult:
    """All-no inputs must give max homogeneous size exactly ell(2k-2); turning
    any single input into a yes-instance must reach ell(2k-2)+1."""
    n = n or default_instance_order(k)
    no = [gen_refinement_instance(n, k, "no", [seed, 0, i]) for i in range(t)]
    out = compose(no, strategy, seed=seed)
    base = out.result
    all_no_max = homogeneous_number(base.g_prime)
    flips = 0
    for i in range(t):
        insts = list(no)
        insts[i] = gen_refinement_instance(n, k, "yes", [seed, 1, i])
        res = compose(insts, strategy, seed=seed).result
        if has_homogeneous(res.g_prime, res.k_prime) is not None:
            flips += 1
    return SharpnessResult(t, k, strategy, seed, base.ell, base.k_prime, base.g_prime.n,
                           all_no_max, flips)


BLOWUP_FIELDS = ("t", "k", "strategy", "ell", "k_prime", "k_prime_over_k", "vertices", "note")


def blowup_report(t_values: Sequence[int], k_values: Sequence[int], strategies: Sequence[str],
                  n: Optional[int] = None, seed: int = 0) -> list[dict]:
    """Parameter blow-up k' = ell(2k-2)+1 and composed size per configuration.

    ``vertices`` assumes every instance has ``n`` vertices (default k+2).
    Configurations a strategy cannot serve get an empty row with a note.
    """
    rows = []
    for strategy in strategies:
        for k in k_values:
            block = 2 * ((n or default_instance_order(k)) + 2 * k - 3)
            for t in t_values:
                row = dict.fromkeys(BLOWUP_FIELDS, "")
                row.update(t=t, k=k, strategy=strategy)
                try:
                    host = make_host(t, strategy, seed=seed)
                except (TableInsufficientError, HostSearchError) as e:
                    row["note"] = str(e).split(";")[0].split(":")[0]
                    rows.append(row)
                    continue
                k_prime = host.ell * (2 * k - 2) + 1
                row.update(ell=host.ell, k_prime=k_prime, k_prime_over_k=round(k_prime / k, 4),
                           vertices=host.h.n * block)
                rows.append(row)
    return rows
