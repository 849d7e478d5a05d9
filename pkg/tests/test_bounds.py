from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from targetset import (
    Graph,
    bound_new,
    bound_old,
    check_bound_dominance,
    clique_graph,
    cycle_graph,
    random_in_degree,
    star_graph,
    tss_solve,
)
from conftest import connected_gnp, path_graph, random_instance


def test_star_new_bound_is_one():
    for n, center in ((5, 3), (50, 10), (500, 499 - 1)):
        g = star_graph(n)
        t = [center] + [1] * (n - 1)
        assert bound_new(g, t) == 1


def test_star_old_bound_formula():
    g = star_graph(9)
    t = [5] + [1] * 8
    assert bound_old(g, t) == Fraction(5, 9) + Fraction(8, 2)


def test_path_with_heavy_middle():
    g = path_graph(3)
    t = [1, 2, 1]
    assert bound_new(g, t) == 1
    assert bound_old(g, t) == Fraction(5, 3)


def test_triangle_unit_thresholds():
    g = clique_graph(3)
    t = [1, 1, 1]
    assert bound_new(g, t) == 1
    assert bound_old(g, t) == 1


def test_isolated_zero_threshold_vertex_contributes_nothing():
    g = Graph(1)
    assert bound_old(g, [0]) == 0
    assert bound_new(g, [0]) == 0


def test_bounds_coincide_without_threshold_one_leaves():
    # min degree >= 2 makes every restricted neighbor count equal the degree
    for g in (cycle_graph(7), clique_graph(5)):
        t = random_in_degree(g, seed=3)
        assert bound_new(g, t) == bound_old(g, t)


def test_dominance_report_on_star():
    g = star_graph(9)
    t = [5] + [1] * 8
    report = check_bound_dominance(g, t)
    assert report.applicable
    assert report.v2_size == 1
    assert report.bound_new == 1
    assert report.tss_size == 1
    assert report.bound_old / report.bound_new >= Fraction(9 - 1, 2)


def test_two_vertex_component_marks_inapplicable():
    g = Graph(5, [(0, 1), (2, 3), (3, 4)])
    report = check_bound_dominance(g, [1, 1, 1, 2, 1])
    assert not report.applicable


def test_report_csv_row_shape():
    report = check_bound_dominance(clique_graph(3), [1, 1, 1])
    assert report.csv_row() == "1,1,1,true"


def test_disconnected_bound_equals_sum_over_components():
    # no edges cross components, so the restricted neighbor counts and the
    # summation domain are both local: the global sum is the component sum
    from targetset import Graph, connected_components

    g = Graph(8, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)])
    t = [1, 2, 1, 1, 1, 2, 2, 3]
    per_component = 0
    for comp in connected_components(g):
        relabel = {v: i for i, v in enumerate(comp)}
        sub = Graph(
            len(comp),
            [(relabel[u], relabel[v]) for u, v in g.edges() if u in relabel and v in relabel],
        )
        per_component += bound_new(sub, [t[v] for v in comp])
    assert bound_new(g, t) == per_component


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_new_bound_never_exceeds_old_bound(seed):
    g, t = random_instance(seed)
    assert bound_new(g, t) <= bound_old(g, t)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9))
def test_solver_size_within_new_bound_on_connected_graphs(seed):
    g = connected_gnp(seed, n_lo=5, n_hi=40)
    t = random_in_degree(g, seed=seed)
    report = check_bound_dominance(g, t)  # raises internally on violation
    assert report.applicable
    assert tss_solve(g, t).size <= report.bound_new
