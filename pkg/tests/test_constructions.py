import pytest

from oracles import nx_omega_alpha, subset_omega_alpha
from ramseykern.constructions import Instance, dummy_graph, embed, local_graph
from ramseykern.generators import cycle, path
from ramseykern.graph import complement, complete, disjoint_union, empty, induced_subgraph
from ramseykern.host import HostGraph, turan_complement_host
from ramseykern.solvers import homogeneous_number

C5_NO = Instance(cycle(5), 3, (0, 1), (0, 2))
K3_PLUS = Instance(disjoint_union(complete(3), empty(1)), 3, (0, 1), (0, 3))
SINGLE = HostGraph(complete(1), 1, ((0,),))


def test_instance_legality():
    assert C5_NO.is_legal_refinement()
    assert not Instance(cycle(5), 3, (0, 2), (0, 1)).is_legal_refinement()
    assert not Instance(cycle(5), 3, (0,), (0, 2)).is_legal_refinement()
    assert not Instance(cycle(5), 3).is_legal_refinement()
    with pytest.raises(ValueError):
        Instance(cycle(5), 3, (0, 1), None)


def test_dummy_graph_examples():
    assert dummy_graph(2) == complete(1)
    p3 = dummy_graph(3)
    assert p3.m == 2 and sorted(p3.degree(v) for v in range(3)) == [1, 1, 2]
    assert dummy_graph(5).n == 7
    with pytest.raises(ValueError):
        dummy_graph(1)


@pytest.mark.parametrize("c", range(2, 9))
def test_dummy_law(c):
    assert subset_omega_alpha(dummy_graph(c)) == (c - 1, c - 1)


def test_local_graph_no_instance():
    h = local_graph(C5_NO)
    assert h.n == 16
    assert subset_omega_alpha(h) == (4, 4)


def test_local_graph_yes_instance():
    h = local_graph(K3_PLUS)
    w, a = subset_omega_alpha(h)
    assert w >= 5 and a >= 5


@pytest.mark.parametrize("g, k", [(cycle(5), 3), (cycle(5), 4), (path(4), 3), (cycle(7), 4)])
def test_local_graph_size(g, k):
    assert local_graph(Instance(g, k)).n == 2 * (g.n + 2 * k - 3)


@pytest.mark.parametrize("g", [cycle(5), path(4), disjoint_union(complete(3), empty(1))])
def test_local_graph_halves_swap_under_complement(g):
    a = local_graph(Instance(g, 3))
    b = local_graph(Instance(complement(g), 3))
    half = a.n // 2
    swapped = list(range(half, a.n)) + list(range(half))
    assert induced_subgraph(a, swapped) == b
    assert subset_omega_alpha(a) == subset_omega_alpha(b)


def test_embed_single_vertex_host():
    res = embed(SINGLE, 3, [C5_NO])
    assert res.g_prime == local_graph(C5_NO)
    assert res.k_prime == 5 and res.assignment == (0,) and res.block_ranges == ((0, 16),)
    assert max(subset_omega_alpha(res.g_prime)) == 4
    res = embed(SINGLE, 3, [K3_PLUS])
    assert max(subset_omega_alpha(res.g_prime)) >= 5


def test_embed_turan_four_no():
    host = turan_complement_host(4)
    res = embed(host, 3, [C5_NO] * 4)
    assert res.g_prime.n == 64 and res.k_prime == 9
    assert max(nx_omega_alpha(res.g_prime)) == 8
    assert homogeneous_number(res.g_prime) == 8


def test_embed_round_robin_and_errors():
    host = turan_complement_host(4)
    res = embed(host, 3, [C5_NO, K3_PLUS, C5_NO])
    assert res.assignment == (0, 1, 2, 0)
    assert res.block_ranges == ((0, 16), (16, 30), (30, 46), (46, 62))
    with pytest.raises(ValueError):
        embed(host, 3, [])
    with pytest.raises(ValueError):
        embed(host, 3, [C5_NO] * 5)
    with pytest.raises(ValueError):
        embed(host, 2, [C5_NO])
    with pytest.raises(ValueError, match="expected 3"):
        embed(host, 3, [Instance(cycle(5), 4)])
