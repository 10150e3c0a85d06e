import math

import pytest

from ramseykern.generators import cycle, paley, petersen
from ramseykern.graph import complete
from ramseykern.ramsey import (
    COMPUTED,
    PAPER,
    RamseyTable,
    ScaleGuardError,
    TableInsufficientError,
    compute_ramsey_exhaustive,
    default_table,
    ell_upper_bound,
    erdos_lower_bound,
    find_gap,
    graph_from_edge_mask,
    lemma5_ell,
    ramsey_witness_count,
    spencer_lower_estimate,
    verify_ramsey_witness,
)
from ramseykern.solvers import has_homogeneous


def test_verify_witness_examples(backend):
    assert verify_ramsey_witness(cycle(5), 3)
    assert verify_ramsey_witness(paley(17), 4)
    assert not verify_ramsey_witness(petersen(), 1)
    assert not verify_ramsey_witness(complete(3), 3)


@pytest.mark.parametrize("k, expected", [(1, 1), (2, 2), (3, 6)])
def test_compute_exhaustive(backend, k, expected):
    assert compute_ramsey_exhaustive(k, 7) == expected


def test_compute_guards():
    with pytest.raises(ScaleGuardError):
        compute_ramsey_exhaustive(4, 20)
    with pytest.raises(ValueError, match="n_cap"):
        compute_ramsey_exhaustive(3, 5)


def test_exhaustive_agrees_with_solver():
    # 5 vertices: exactly the 12 labeled C5; 6 vertices: none
    assert ramsey_witness_count(5, 3) == 12
    assert ramsey_witness_count(6, 3) == 0
    hits = [m for m in range(1 << 10) if verify_ramsey_witness(graph_from_edge_mask(5, m), 3)]
    assert len(hits) == 12
    assert all(graph_from_edge_mask(5, m).m == 5 for m in hits)


def test_erdos_bound():
    assert [erdos_lower_bound(n) for n in (1, 2, 3, 9)] == [1, 2, 2, 16]
    for n in range(1, 40):
        assert erdos_lower_bound(n) == math.ceil(2 ** ((n - 1) / 2) - 1e-12)
    for k, v in default_table().values().items():
        assert erdos_lower_bound(k) <= v


def test_spencer_estimate():
    # 4/(e*sqrt 2), 16/(e*sqrt 2), 320/(e*sqrt 2)
    assert spencer_lower_estimate(2) == pytest.approx(1.040520, abs=1e-6)
    assert spencer_lower_estimate(4) == pytest.approx(4.162081, abs=1e-6)
    assert spencer_lower_estimate(10) == pytest.approx(83.24161, abs=1e-5)


@pytest.mark.parametrize("t, ell, T", [(4, 3, 10), (11, 3, 17)] + [(t, 3, 6 + t) for t in range(4, 12)])
def test_lemma5_ell(t, ell, T):
    res = lemma5_ell(t)
    assert (res.ell, res.T) == (ell, T)
    table = default_table()
    assert res.T < table[res.ell + 1]
    assert res.ell <= ell_upper_bound(t)


def test_lemma5_insufficient_table():
    with pytest.raises(TableInsufficientError, match="supports t <= 11"):
        lemma5_ell(12)
    with pytest.raises(ValueError):
        lemma5_ell(3)


@pytest.mark.parametrize("t", [1, 2, 3])
def test_small_t_gap(t):
    assert find_gap(t).ell == 2 and find_gap(t).T == 2 + t


def test_log_floor():
    assert ell_upper_bound(1) == 8 and ell_upper_bound(2) == 8 and ell_upper_bound(4) == 16


def test_table_json_roundtrip_and_invariants():
    table = default_table()
    assert RamseyTable.from_json(table.to_json()) == table
    assert table.provenance(3) == PAPER and table.max_gap_t() == 11
    with pytest.raises(ValueError):
        RamseyTable({1: (1, PAPER), 2: (2, PAPER), 3: (2, COMPUTED)})
    with pytest.raises(ValueError):
        RamseyTable({1: (1, PAPER)})


def test_witness_check_matches_decision(backend):
    for g in (cycle(5), petersen(), paley(13)):
        for k in range(1, 6):
            assert verify_ramsey_witness(g, k) == (has_homogeneous(g, k) is None)
