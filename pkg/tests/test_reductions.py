import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import subset_omega_alpha
from ramseykern.generators import cycle, random_graph
from ramseykern.graph import complete, empty
from ramseykern.reductions import clique_to_ramsey, ramsey_to_refinement
from ramseykern.solvers import brute_force_homogeneous, has_homogeneous


def test_clique_to_ramsey_examples():
    inst = clique_to_ramsey(complete(3), 3)
    assert inst.k == 7 and inst.g.n == 7
    assert subset_omega_alpha(inst.g)[0] == 7
    inst = clique_to_ramsey(empty(3), 2)
    assert inst.k == 6 and subset_omega_alpha(inst.g) == (5, 3)
    assert brute_force_homogeneous(inst.g, 6) is None
    inst = clique_to_ramsey(complete(1), 1)
    assert inst.k == 3 and subset_omega_alpha(inst.g)[0] == 3
    for k in (0, 4):
        with pytest.raises(ValueError):
            clique_to_ramsey(complete(3), k)


def test_ramsey_to_refinement_examples():
    inst = ramsey_to_refinement(complete(3), 3)
    assert (inst.g.n, inst.k) == (8, 4)
    assert subset_omega_alpha(inst.g)[0] >= 4
    inst = ramsey_to_refinement(cycle(5), 3)
    assert inst.k == 4 and subset_omega_alpha(inst.g) == (3, 3)
    with pytest.raises(ValueError):
        ramsey_to_refinement(cycle(5), 2)


def test_refinement_witness_structure():
    inst = ramsey_to_refinement(cycle(5), 3)
    assert inst.indep_witness == (7, 8, 9)
    assert inst.clique_witness == (5, 6, 7)
    assert inst.g.is_independent(inst.indep_witness)
    assert inst.g.is_clique(inst.clique_witness)
    assert inst.is_legal_refinement()


@settings(max_examples=120, deadline=None)
@given(graphs(min_n=1, max_n=7), st.data())
def test_clique_reduction_equivalence(g, data):
    k = data.draw(st.integers(1, g.n))
    inst = clique_to_ramsey(g, k)
    assert inst.g.n == 2 * g.n + 1
    assert (has_homogeneous(g, k, "clique") is not None) == (has_homogeneous(inst.g, inst.k) is not None)


@settings(max_examples=120, deadline=None)
@given(graphs(min_n=3, max_n=8), st.data())
def test_refinement_reduction_equivalence(g, data):
    k = data.draw(st.integers(3, g.n))
    inst = ramsey_to_refinement(g, k)
    assert inst.g.n == g.n + 2 * k - 1
    assert inst.is_legal_refinement()
    assert (brute_force_homogeneous(g, k) is None) == (has_homogeneous(inst.g, inst.k) is None)


def test_reductions_against_brute_force_random():
    rng = np.random.default_rng(5)
    for _ in range(40):
        n = int(rng.integers(3, 9))
        g = random_graph(n, 0.5, rng)
        k = int(rng.integers(3, n + 1))
        inst = ramsey_to_refinement(g, k)
        assert (brute_force_homogeneous(g, k) is None) == (brute_force_homogeneous(inst.g, inst.k) is None)
