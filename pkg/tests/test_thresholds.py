import io

import pytest

from targetset import (
    Graph,
    assign_thresholds,
    constant_capped,
    degree_thresholds,
    load_edge_list,
    load_thresholds,
    random_in_degree,
    star_graph,
)
from conftest import path_graph


def test_constant_capped_on_path():
    g = path_graph(3)
    assert constant_capped(g, 2) == [1, 2, 1]


def test_constant_capped_requires_positive_t():
    with pytest.raises(ValueError):
        constant_capped(path_graph(3), 0)


def test_constant_capped_isolated_vertex_gets_zero():
    g = Graph(3, [(0, 1)])
    assert constant_capped(g, 4) == [1, 1, 0]


def test_degree_policy_is_the_degree_sequence():
    g = star_graph(6)
    assert degree_thresholds(g) == g.degrees


def test_random_policy_stays_in_degree_range_and_is_seeded():
    g = star_graph(5)
    t = random_in_degree(g, seed=5)
    assert t == random_in_degree(g, seed=5)
    assert t[1:] == [1, 1, 1, 1]  # degree-1 leaves are forced to 1
    assert 1 <= t[0] <= 4


def test_random_policy_isolated_vertex_gets_zero():
    g = Graph(2, [])
    assert random_in_degree(g, seed=0) == [0, 0]


def test_explicit_file_maps_original_ids():
    g = load_edge_list(io.StringIO("5 9\n9 7"))
    t = load_thresholds(g, io.StringIO("5 2\n9 1\n7 0\n"))
    assert t == [2, 1, 0]


def test_explicit_file_lists_missing_vertices():
    g = load_edge_list(io.StringIO("5 9\n9 7"))
    with pytest.raises(ValueError, match=r"\[5, 7\]"):
        load_thresholds(g, io.StringIO("9 1\n"))


def test_explicit_file_rejects_unknown_and_negative():
    g = load_edge_list(io.StringIO("0 1"))
    with pytest.raises(ValueError, match="unknown vertex"):
        load_thresholds(g, io.StringIO("0 1\n1 1\n4 1\n"))
    with pytest.raises(ValueError, match="negative"):
        load_thresholds(g, io.StringIO("0 -1\n1 1\n"))


def test_assign_thresholds_dispatch():
    g = path_graph(3)
    assert assign_thresholds(g, "const:2") == [1, 2, 1]
    assert assign_thresholds(g, "degree") == [1, 2, 1]
    assert assign_thresholds(g, "random", seed=1) == assign_thresholds(g, "random", seed=1)
    with pytest.raises(ValueError):
        assign_thresholds(g, "mystery")
    with pytest.raises(ValueError):
        assign_thresholds(g, "const:x")


def test_policy_outputs_stay_within_degree_ranges():
    from conftest import random_instance

    for seed in range(20):
        g, _ = random_instance(seed)
        for c in (1, 3, 10):
            for v, tv in enumerate(constant_capped(g, c)):
                assert 0 <= tv <= g.degree(v)
        for v, tv in enumerate(random_in_degree(g, seed=seed)):
            if g.degree(v) >= 1:
                assert 1 <= tv <= g.degree(v)
            else:
                assert tv == 0
