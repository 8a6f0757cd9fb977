import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bnpg import (BnpgInstance, Graph, delta_g, is_best_response, is_psne, max_epsilon,
                  neighbor_invest_count, social_welfare, utility, validate)
from bnpg.game import (FULLY_HOMOGENEOUS, HOMOGENEOUS, deviation_gains, detect_homogeneity,
                       parse_profile, profile_str)

from factories import heterogeneous, homogeneous, path_game, random_graph, two_player_game


def test_neighbor_invest_count():
    inst = path_game()
    assert neighbor_invest_count(inst, [1, 0, 1], 1) == 2
    assert neighbor_invest_count(inst, [0, 0, 0], 0) == 0
    k4 = BnpgInstance.homogeneous(Graph.complete(4), np.arange(5.0), np.zeros(4))
    assert neighbor_invest_count(k4, [1, 1, 0, 1], 3) == 2
    with pytest.raises(IndexError):
        neighbor_invest_count(inst, [0, 0, 0], 3)


def test_utility():
    inst = path_game()
    assert utility(inst, [1, 0, 1], 1) == 9.5
    assert utility(inst, [1, 0, 1], 0) == 5.0
    zero = BnpgInstance.homogeneous(Graph.path(3), np.zeros(4), np.zeros(3))
    for x in itertools.product((0, 1), repeat=3):
        assert all(utility(zero, x, i) == 0 for i in range(3))


def test_delta_g():
    inst = path_game()
    assert [delta_g(inst, 1, t) for t in range(3)] == [1.5, 3.5, 0.5]
    flat = BnpgInstance.homogeneous(Graph.path(3), np.full(4, 2.0), np.zeros(3))
    assert all(delta_g(flat, 1, t) == 0 for t in range(3))
    with pytest.raises(IndexError):
        delta_g(inst, 0, 2)


def test_delta_g_three_ris_values():
    from bnpg.generators import three_ris_g
    g = three_ris_g(np.arange(6))
    inst = BnpgInstance.fully_homogeneous(Graph.complete(5), g, 2.0)
    assert delta_g(inst, 0, 3) == 2.0
    assert delta_g(inst, 0, 2) == 1.0
    assert delta_g(inst, 0, 4) == 1.0


def test_is_best_response():
    inst = path_game()
    assert not is_best_response(inst, [0, 0, 0], 0)
    assert is_best_response(inst, [0, 0, 0], 2)
    indiff = BnpgInstance(Graph.empty(1), [1.0], ([0.0, 1.0],))
    assert is_best_response(indiff, [0], 0) and is_best_response(indiff, [1], 0)


def test_is_psne_examples():
    inst = path_game()
    assert not any(is_psne(inst, x) for x in itertools.product((0, 1), repeat=3))
    two = two_player_game()
    assert not any(is_psne(two, x) for x in itertools.product((0, 1), repeat=2))
    single = BnpgInstance(Graph.empty(1), [0.5], ([0.0, 1.0],))
    assert is_psne(single, [1])


def test_max_epsilon_examples():
    inst = path_game()
    assert max_epsilon(inst, [0, 0, 0]) == 0.5
    # player 2 holds n=2 and would save c_2 - Δg(2) = 2 - 0.5 by abstaining;
    # player 3 is an endpoint (n=1) and strictly prefers investing
    assert max_epsilon(inst, [1, 1, 1]) == 1.5
    assert deviation_gains(inst, [1, 1, 1]).tolist() == [-2.5, 1.5, -0.5]
    gains = deviation_gains(inst, [0, 0, 0])
    assert gains.tolist() == [0.5, -0.5, -1.5]


def test_max_epsilon_normalized_by_utility_range():
    inst = path_game()
    # player 1: utilities over (x, n) are g(0..1) and g(1..2) - 1 -> range 8.5 - 4.5
    assert inst.utility_range[0] == 4.0
    assert max_epsilon(inst, [0, 0, 0], normalized=True) == pytest.approx(0.5 / 4.0)


def test_social_welfare_examples():
    inst = path_game()
    assert social_welfare(inst, [0, 0, 0]) == 13.5
    assert social_welfare(inst, [1, 1, 1]) == 23.0
    one = BnpgInstance(Graph.empty(1), [0.0], ([0.0, 0.0],))
    assert social_welfare(one, [0]) == 0.0


def test_validate_examples():
    assert validate(path_game()) == []
    bad_table = BnpgInstance(Graph.empty(1), [0.0], ([1.0, 0.5, 2.0],))
    problems = validate(bad_table)
    assert any("monotonicity violation at index 1" in p for p in problems)
    asym = BnpgInstance(Graph(2, ((1,), ())), [0.0, 0.0], ([0, 1, 1], [0, 1]))
    assert any("symmetry" in p for p in validate(asym))


def test_validate_length_and_tags():
    short = BnpgInstance(Graph.path(2), [0, 0], ([0, 1], [0, 1, 2]))
    assert any("table length" in p for p in validate(short))
    mixed = BnpgInstance(Graph.path(2), [0, 1], ([0, 1, 2], [0, 1, 2]), FULLY_HOMOGENEOUS)
    assert any("costs differ" in p for p in validate(mixed))
    differ = BnpgInstance(Graph.path(2), [0, 0], ([0, 1, 2], [0, 2, 2]), HOMOGENEOUS)
    assert any("tables differ" in p for p in validate(differ))
    assert detect_homogeneity(differ) == "heterogeneous"


def test_graph_from_edges_rejects_self_loop():
    from bnpg.errors import InvalidInstance
    with pytest.raises(InvalidInstance):
        Graph.from_edges(2, [(1, 1)])


def test_profile_strings():
    assert profile_str(parse_profile("0110")) == "0110"
    with pytest.raises(ValueError):
        parse_profile("012")


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_psne_iff_zero_epsilon(seed):
    rng = np.random.default_rng(seed)
    inst = heterogeneous(random_graph(int(rng.integers(1, 7)), rng), rng)
    for bits in itertools.product((0, 1), repeat=inst.n):
        x = np.array(bits)
        psne = is_psne(inst, x)
        assert psne == (max_epsilon(inst, x) == 0)
        assert psne == (max_epsilon(inst, x, normalized=True) == 0)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_best_response_threshold_matches_utility_comparison(seed):
    rng = np.random.default_rng(seed)
    inst = heterogeneous(random_graph(int(rng.integers(1, 7)), rng), rng)
    x = rng.integers(0, 2, inst.n)
    for i in range(inst.n):
        y = x.copy()
        y[i] = 1 - x[i]
        by_utility = utility(inst, x, i) >= utility(inst, y, i)
        assert is_best_response(inst, x, i) == by_utility
        for t in range(inst.graph.degrees[i] + 1):
            assert delta_g(inst, i, t) >= 0


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_utility_ignores_non_neighbors(seed):
    rng = np.random.default_rng(seed)
    inst = heterogeneous(random_graph(int(rng.integers(2, 8)), rng), rng)
    x = rng.integers(0, 2, inst.n)
    for i in range(inst.n):
        others = [j for j in range(inst.n) if j != i and j not in inst.graph.adjacency[i]]
        y = x.copy()
        y[others] = rng.permutation(x[others])
        assert utility(inst, x, i) == utility(inst, y, i)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_complete_graph_welfare_closed_form(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 9))
    inst = homogeneous(Graph.complete(n), rng)
    g = inst.common_table()
    x = rng.integers(0, 2, n)
    k = int(x.sum())
    assert social_welfare(inst, x) == n * g[k] - float(inst.costs @ x)
