import itertools
import random
from math import comb

import pytest

from ellcover import (
    FeynmanGraph,
    f_g,
    generating_function,
    gromov_witten_a,
    gromov_witten_d,
    i_gamma_series,
    integral_coeff,
)
from ellcover.integrals import MultiSeries, all_orders, compositions, i_gamma_coeffs_for_order


BRANCH = (0, 0, 0, 0, 1, 1)


def test_single_order_integral(caterpillar):
    assert integral_coeff(caterpillar, BRANCH, (3, 1, 2, 4)) == 4
    assert integral_coeff(caterpillar, BRANCH, (1, 2, 3, 4)) == 0


def test_only_two_orders_contribute(caterpillar):
    nonzero = {
        order: v
        for order in all_orders(caterpillar)
        if (v := integral_coeff(caterpillar, BRANCH, order))
    }
    assert nonzero == {(3, 1, 2, 4): 4, (4, 2, 1, 3): 4}


def test_gromov_witten_branch_type(caterpillar):
    assert gromov_witten_a(caterpillar, BRANCH) == 8
    assert gromov_witten_a(caterpillar, (0, 2, 1, 0, 0, 1)) == 256


def test_gromov_witten_degree(caterpillar, theta, dumbbell):
    assert gromov_witten_d(caterpillar, 2) == 32
    # theta degree totals read off its printed generating function
    assert gromov_witten_d(theta, 1) == 0
    assert gromov_witten_d(theta, 2) == 24
    assert gromov_witten_d(theta, 3) == 192
    assert gromov_witten_d(dumbbell, 2) == 0


def test_zero_branch_type_gives_zero(theta, caterpillar, k4):
    for graph in (theta, caterpillar, k4):
        zero = (0,) * len(graph.edges)
        for order in all_orders(graph):
            assert integral_coeff(graph, zero, order) == 0


def test_generating_function_caterpillar(caterpillar):
    series = generating_function(caterpillar, 2)
    assert series.coeffs == {
        (2, 0, 0, 0, 0, 0): 8,
        (0, 1, 1, 0, 0, 0): 8,
        (0, 0, 0, 2, 0, 0): 8,
        (0, 0, 0, 0, 1, 1): 8,
    }
    assert str(series) == "8*q(1)^2+8*q(2)*q(3)+8*q(4)^2+8*q(5)*q(6)"


def test_generating_function_theta(theta):
    series = generating_function(theta, 3)
    assert str(series) == (
        "24*q(1)^3+20*q(1)^2*q(2)+20*q(1)*q(2)^2+24*q(2)^3+20*q(1)^2*q(3)"
        "+20*q(2)^2*q(3)+20*q(1)*q(3)^2+20*q(2)*q(3)^2+24*q(3)^3"
        "+4*q(1)^2+4*q(1)*q(2)+4*q(2)^2+4*q(1)*q(3)+4*q(2)*q(3)+4*q(3)^2"
    )


def test_generating_function_bridged_graph_is_zero(dumbbell):
    assert generating_function(dumbbell, 3).coeffs == {}
    assert str(generating_function(dumbbell, 3)) == "0"


def test_multiseries_sorted_order():
    s = MultiSeries(2, {(0, 1): 1, (2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert [a for a, _ in s.sorted_items()] == [(2, 0), (1, 1), (0, 2), (0, 1)]


def test_graph_series_known_values(caterpillar_series_16, k4_series_16):
    assert {e: c for e, c in caterpillar_series_16.coeffs.items() if e <= 12} == {
        4: 32,
        6: 1792,
        8: 25344,
        10: 182272,
        12: 886656,
    }
    assert {e: c for e, c in k4_series_16.coeffs.items() if e <= 12} == {
        6: 1152,
        8: 20736,
        10: 165888,
        12: 843264,
    }


def test_graph_series_agrees_with_composition_sum(caterpillar, theta):
    s = i_gamma_series(caterpillar, 2)
    assert s.coeff(4) == gromov_witten_d(caterpillar, 2)
    assert s.coeff(2) == gromov_witten_d(caterpillar, 1)
    t = i_gamma_series(theta, 3)
    for d in (1, 2, 3):
        assert t.coeff(2 * d) == gromov_witten_d(theta, d)


def test_bridged_graph_series_is_zero(dumbbell):
    assert i_gamma_series(dumbbell, 3).is_zero()


def test_f_g_values():
    f2 = f_g(2, 3)
    assert f2.coeffs == {4: 2, 6: 16}
    f3 = f_g(3, 3)
    assert f3.coeffs == {4: 2, 6: 160}


def test_f3_is_weighted_sum_of_graph_series(caterpillar_series_16, k4_series_16):
    f3 = f_g(3, 4)
    for d in (1, 2, 3, 4):
        # 1/16 and 1/24 over the common denominator 48
        expected = 3 * caterpillar_series_16.coeff(2 * d) + 2 * k4_series_16.coeff(2 * d)
        assert f3.coeff(2 * d) * 48 == expected


def test_order_reversal_symmetry(caterpillar, theta):
    rng = random.Random(5)
    cases = [(caterpillar, (0, 2, 1, 0, 0, 1)), (caterpillar, BRANCH)]
    for d in range(1, 5):
        for a in compositions(d, 3):
            cases.append((theta, a))
    for _ in range(12):
        d = rng.randint(1, 4)
        a = rng.choice(list(compositions(d, 6)))
        cases.append((caterpillar, a))
    for graph, a in cases:
        for order in all_orders(graph):
            rev = tuple(reversed(order))
            assert integral_coeff(graph, a, order) == integral_coeff(graph, a, rev)


def test_elimination_order_independence(caterpillar):
    rng = random.Random(9)
    for a in [(0, 2, 1, 0, 0, 1), BRANCH, (1, 0, 1, 1, 0, 1)]:
        for _ in range(4):
            order = tuple(rng.sample(range(1, 5), 4))
            elim = tuple(rng.sample(range(1, 5), 4))
            assert integral_coeff(caterpillar, a, order) == integral_coeff(
                caterpillar, a, order, elimination_order=elim
            )


def test_truncation_robustness(caterpillar, theta, k4):
    for graph in (theta, caterpillar, k4):
        m = len(graph.edges)
        for d in (1, 2, 3):
            for a in itertools.islice(compositions(d, m), 12):
                base = gromov_witten_a(graph, a)
                order = tuple(range(1, graph.vertex_count + 1))
                assert integral_coeff(graph, a, order, w_max=d + 3) == integral_coeff(
                    graph, a, order
                )
                assert base >= 0


def test_bridge_iff_all_counts_vanish():
    from ellcover import bridges, enumerate_genus

    for g in (2, 3):
        for graph in enumerate_genus(g):
            m = len(graph.edges)
            nonzero = False
            for d in range(4):
                for a in compositions(d, m):
                    value = gromov_witten_a(graph, a)
                    assert value >= 0
                    if value:
                        nonzero = True
            assert bool(bridges(graph)) == (not nonzero)


def test_compositions_count():
    for d, parts in [(0, 3), (3, 3), (4, 6), (2, 1)]:
        assert len(list(compositions(d, parts))) == comb(d + parts - 1, parts - 1)
    assert list(compositions(2, 0)) == []
    assert list(compositions(0, 0)) == [()]


def test_branch_type_validation(caterpillar):
    with pytest.raises(ValueError):
        integral_coeff(caterpillar, (1, 2, 3), (1, 2, 3, 4))
    with pytest.raises(ValueError):
        integral_coeff(caterpillar, (0, 0, 0, 0, 1, -1), (1, 2, 3, 4))
    with pytest.raises(ValueError):
        integral_coeff(caterpillar, BRANCH, (1, 2, 3))


def test_per_order_graded_extraction_matches_single(caterpillar):
    order = (3, 1, 2, 4)
    graded = i_gamma_coeffs_for_order(caterpillar, order, 3)
    for d in (1, 2, 3):
        total = sum(integral_coeff(caterpillar, a, order) for a in compositions(d, 6))
        assert graded.get(d, 0) == total


def test_f_g_rejects_small_genus():
    with pytest.raises(ValueError):
        f_g(1, 3)
