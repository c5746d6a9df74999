import random
from collections import Counter
from itertools import combinations

import networkx as nx
import pytest

from centroidal.sweep import (
    CONNECTED_COUNTS,
    CSV_COLUMNS,
    analyse,
    connected_graphs,
    min_set_cover_size,
    random_connected_graph,
    sweep_exhaustive,
    sweep_sample,
)


def test_connected_counts():
    counts = Counter(g.n for g in connected_graphs(7))
    assert [counts[n] for n in range(1, 8)] == list(CONNECTED_COUNTS[1:])


def test_atlas_graphs_pairwise_non_isomorphic():
    for n in range(1, 6):
        gs = [nx.Graph(list(g.sorted_edges())) for g in connected_graphs(n, n)]
        for h in gs:
            h.add_nodes_from(range(n))
        for a, b in combinations(gs, 2):
            assert not nx.is_isomorphic(a, b)


def test_exhaustive_limit():
    with pytest.raises(ValueError):
        list(connected_graphs(8))


def test_sweep_six_has_no_violations():
    rows = list(sweep_exhaustive(6))
    assert len(rows) == sum(CONNECTED_COUNTS[:7])
    assert [r.violations for r in rows if r.violations] == []
    assert all(len(r.csv_row()) == len(CSV_COLUMNS) for r in rows)


def test_random_graphs_connected_and_seeded():
    rng = random.Random(3)
    assert all(random_connected_graph(9, 0.2, rng).is_connected() for _ in range(20))
    first = [r.graph for r in sweep_sample(5, 8, 0.3, seed=11)]
    again = [r.graph for r in sweep_sample(5, 8, 0.3, seed=11)]
    assert first == again


def test_min_set_cover_size():
    assert min_set_cover_size([0b011, 0b110, 0b100], 0b111, 3) == 2
    assert min_set_cover_size([0b001], 0b011, 3) is None


def test_analyse_row_p4():
    import centroidal.graph as gc

    row = analyse(gc.path(4))
    assert (row.md, row.cd, row.ld, row.family) == (1, 3, 2, "T_n")
    assert row.set_cover_opt is not None and row.set_cover_opt <= 3
    assert not row.violations
