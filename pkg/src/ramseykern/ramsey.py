"""Small diagonal Ramsey numbers: exact table, exhaustive computation,
witness checking, bound formulas and the Ramsey-gap finder used to pick
the host level."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Mapping

from ._backend import kernels
from .graph import Graph
from .solvers import has_homogeneous

PAPER = "paper-stated"
COMPUTED = "computed"
EXTERNAL = "external"
PROVENANCES = (PAPER, COMPUTED, EXTERNAL)


class TableInsufficientError(ValueError):
    """The exact table has no Ramsey gap wide enough for the requested t."""


class ScaleGuardError(ValueError):
    pass


@dataclass(frozen=True)
class RamseyTable:
    """Exact values R(k) with a provenance tag per entry."""

    entries: Mapping[int, tuple[int, str]] = field(default_factory=dict)

    def __post_init__(self):
        ks = sorted(self.entries)
        for k in ks:
            value, prov = self.entries[k]
            if prov not in PROVENANCES:
                raise ValueError(f"R({k}): unknown provenance {prov!r}")
        for a, b in zip(ks, ks[1:]):
            if self.entries[a][0] >= self.entries[b][0]:
                raise ValueError(f"table not strictly increasing at R({a}), R({b})")
        if self.entries.get(1, (None,))[0] != 1 or self.entries.get(2, (None,))[0] != 2:
            raise ValueError("table must contain R(1)=1 and R(2)=2")

    def __contains__(self, k: int) -> bool:
        return k in self.entries

    def __getitem__(self, k: int) -> int:
        return self.entries[k][0]

    def provenance(self, k: int) -> str:
        return self.entries[k][1]

    def values(self) -> dict[int, int]:
        return {k: v for k, (v, _) in sorted(self.entries.items())}

    def max_gap_t(self) -> int:
        """Largest t for which some consecutive pair has R(l+1) > R(l) + t."""
        best = 0
        for k in sorted(self.entries):
            if k + 1 in self.entries:
                best = max(best, self[k + 1] - self[k] - 1)
        return best

    def to_json(self) -> str:
        data = {str(k): {"value": v, "provenance": p} for k, (v, p) in sorted(self.entries.items())}
        return json.dumps(data, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> RamseyTable:
        data = json.loads(text)
        return cls({int(k): (int(e["value"]), e["provenance"]) for k, e in data.items()})


def default_table() -> RamseyTable:
    # R(4) = 18 is not load-bearing for correctness: it only steers the choice of T
    return RamseyTable({1: (1, PAPER), 2: (2, PAPER), 3: (6, PAPER), 4: (18, EXTERNAL)})


def verify_ramsey_witness(g: Graph, k: int) -> bool:
    """True iff ``g`` has neither a k-clique nor a k-independent set,
    which certifies R(k) > g.n."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return has_homogeneous(g, k) is None


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Labeled graph whose edge slots (lexicographic pairs) are the bits of ``mask``."""
    edges = []
    i = 0
    for u in range(n):
        for v in range(u + 1, n):
            if (mask >> i) & 1:
                edges.append((u, v))
            i += 1
    return Graph.from_edges(n, edges)


def compute_ramsey_exhaustive(k: int, n_cap: int, max_edge_bits: int = 15) -> int:
    """Smallest N <= n_cap such that no labeled N-vertex graph avoids both a
    k-clique and a k-independent set.

    Enumerates all 2^C(N,2) edge masks; refuses any N with C(N,2) above
    ``max_edge_bits`` (default 15, i.e. N <= 6).
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    for n in range(1, n_cap + 1):
        bits = n * (n - 1) // 2
        if bits > max_edge_bits:
            raise ScaleGuardError(
                f"scale guard: N={n} needs 2^{bits} graphs (max_edge_bits={max_edge_bits})")
        count, _ = kernels.count_ramsey_witnesses(n, k, 1)
        if count == 0:
            return n
    raise ValueError(f"R({k}) > n_cap={n_cap}")


def ramsey_witness_count(n: int, k: int) -> int:
    """Number of labeled n-vertex graphs with no homogeneous k-set."""
    return kernels.count_ramsey_witnesses(n, k)[0]


def erdos_lower_bound(n: int) -> int:
    """ceil(2^((n-1)/2)), a certified lower bound on R(n)."""
    if n < 1:
        raise ValueError(f"N must be positive, got {n}")
    x = 1 << (n - 1)
    return math.isqrt(x - 1) + 1


def spencer_lower_estimate(k: int) -> float:
    """Dominant term k * 2^(k/2) / (e * sqrt 2) of the Local Lemma bound.

    Not certified: the o(1) correction is dropped.  Informational only.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return k * 2 ** (k / 2) / (math.e * math.sqrt(2))


def log2_floor1(t: float) -> float:
    """log2(t), but never below 1."""
    return max(1.0, math.log2(t)) if t > 0 else 1.0


def ell_upper_bound(t: int) -> int:
    """ceil(8 * log2 t), with log2 t taken to be at least 1."""
    return math.ceil(8 * log2_floor1(t))


@dataclass(frozen=True)
class GapResult:
    ell: int
    T: int


def find_gap(t: int, table: RamseyTable | None = None) -> GapResult:
    """Smallest ell with R(ell+1) > R(ell) + t, using only exact table entries."""
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    table = table or default_table()
    for ell in sorted(table.entries):
        if ell + 1 in table and table[ell + 1] > table[ell] + t:
            return GapResult(ell, table[ell] + t)
    raise TableInsufficientError(
        f"table-insufficient: exact Ramsey table {table.values()} supports t <= "
        f"{table.max_gap_t()} only; got t={t}. Use the turan host strategy for larger t.")


def lemma5_ell(t: int, table: RamseyTable | None = None) -> GapResult:
    """Ramsey gap for t > 3, checked against the ceil(8 log2 t) bound on ell."""
    if t <= 3:
        raise ValueError(f"gap bound needs t > 3, got {t}")
    res = find_gap(t, table)
    bound = ell_upper_bound(t)
    assert res.ell <= bound, f"ell={res.ell} exceeds ceil(8 log2 {t})={bound}"
    return res
