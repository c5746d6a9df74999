import math

import networkx as nx
import pytest

from centroidal import graph as gc
from centroidal.bounds import bell_lower_bound, order_cap_diam
from centroidal.constructions import (
    EXTREMAL_FAMILIES,
    construct_cycle_basis,
    construct_diam2,
    construct_diam3,
    construct_path_basis,
    extremal_family,
    fig2_fixtures,
    recognize_extremal,
)
from centroidal.exact import exact_cd
from centroidal.graph import GraphError, all_pairs_distances
from centroidal.locate import is_centroidal_locating


def _verified(inst):
    return bool(is_centroidal_locating(all_pairs_distances(inst.graph), inst.basis))


@pytest.mark.parametrize("k", [4, 5, 6])
def test_diam2(k):
    inst = construct_diam2(k)
    assert inst.graph.n == 2**k + k - 1 == order_cap_diam(2, k)
    assert all_pairs_distances(inst.graph).diameter() == 2
    assert inst.basis == tuple(range(k)) and _verified(inst)


def test_diam2_wiring():
    inst = construct_diam2(4)
    g = inst.graph
    assert [sorted(g.neighbors(b) & set(range(4))) for b in range(4)] == [[1, 3], [0, 2], [1, 3], [0, 2]]
    traces = {frozenset(g.neighbors(s) & set(range(4))) for s in range(4, 19)}
    assert len(traces) == 15 and frozenset() not in traces


@pytest.mark.parametrize("k", [4, 5])
def test_diam3(k):
    inst = construct_diam3(k)
    assert inst.graph.n == 3**k - 2 ** (k + 1) + 2
    assert all_pairs_distances(inst.graph).diameter() == 3
    assert len(inst.basis) == k and _verified(inst)


def test_diam3_order_meets_cap():
    assert construct_diam3(5).graph.n == order_cap_diam(3, 5)


def test_diam3_exact():
    assert exact_cd(construct_diam3(4).graph).value == 4


@pytest.mark.parametrize("builder, bad", [(construct_diam2, 3), (construct_diam3, 3), (construct_cycle_basis, 11), (construct_path_basis, 12)])
def test_construction_errors(builder, bad):
    with pytest.raises(GraphError):
        builder(bad)


@pytest.mark.parametrize("ell", [3, 4, 5, 6, 7])
def test_cycle_basis_size_formula(ell):
    n = 2 * ell * ell
    inst = construct_cycle_basis(n)
    assert len(inst.basis) == math.isqrt(2 * n) - 2
    assert _verified(inst)


@pytest.mark.parametrize("ell", [3, 4, 5])
def test_path_basis_size_formula(ell):
    n = (2 * ell) ** 2 + 1
    inst = construct_path_basis(n)
    assert len(inst.basis) == 2 * math.isqrt(n - 1) - 3
    assert _verified(inst)


def test_named_instances():
    assert construct_cycle_basis(18).basis == (0, 2, 6, 12)
    assert len(construct_cycle_basis(32).basis) == 6
    assert len(construct_path_basis(37).basis) == 9
    assert len(construct_path_basis(25).basis) == 7


@pytest.mark.parametrize("n", range(12, 90))
def test_cycle_every_order(n):
    inst = construct_cycle_basis(n)
    lb, size = inst.claimed_cd
    assert lb <= size == len(inst.basis)
    assert set(inst.minimized) <= set(inst.basis)
    assert is_centroidal_locating(all_pairs_distances(inst.graph), inst.minimized)


@pytest.mark.parametrize("n", range(13, 90))
def test_path_every_order(n):
    inst = construct_path_basis(n)
    lb, size = inst.claimed_cd
    assert lb <= size == len(inst.basis)
    assert {0, n - 1} <= set(inst.minimized)
    assert is_centroidal_locating(all_pairs_distances(inst.graph), inst.minimized)


def test_cycle_18_meets_lower_bound():
    inst = construct_cycle_basis(18)
    assert inst.claimed_cd == (4, 4)
    assert exact_cd(inst.graph).value == 4


@pytest.mark.parametrize("name", EXTREMAL_FAMILIES)
@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_extremal_families(name, n):
    if n == 3 and name in ("S_n", "T_n", "U_n"):
        with pytest.raises(GraphError):
            extremal_family(name, n)
        return
    inst = extremal_family(name, n)
    assert len(inst.basis) == n - 1 and _verified(inst)
    assert exact_cd(inst.graph).value == n - 1
    assert recognize_extremal(inst.graph) is not None


def test_extremal_examples():
    star = extremal_family("K_1,n-1", 6)
    assert star.basis == (1, 2, 3, 4, 5)
    diamond = extremal_family("S_n", 4).graph
    assert nx.is_isomorphic(nx.Graph(diamond.sorted_edges()), nx.Graph([(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]))
    assert exact_cd(extremal_family("U_n", 5).graph).value == 4
    with pytest.raises(GraphError):
        extremal_family("Q_n", 5)


def test_recognizer_examples():
    assert recognize_extremal(gc.path(4)) == "T_n"
    assert recognize_extremal(gc.cycle(4)) == "K_2,n-2"
    assert recognize_extremal(gc.cycle(5)) is None
    assert exact_cd(gc.cycle(5)).value <= 3
    assert recognize_extremal(gc.path(5)) is None


def test_bell_optimal_fixtures():
    a, b = fig2_fixtures()
    for inst in (a, b):
        assert inst.graph.n == 13 and inst.verified
        assert exact_cd(inst.graph).value == 3 == bell_lower_bound(13)
    assert a.basis == (1, 5, 9) and b.basis == (1, 3, 5)
