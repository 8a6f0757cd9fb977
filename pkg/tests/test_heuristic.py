import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bnpg import (BnpgInstance, Graph, HeuristicParams, Status, asynchronous_br, evolve,
                  find_approx_psne, is_psne, max_epsilon)
from bnpg.generators import GraphSpec, UtilityFamilyParams, gen_graph, gen_utilities
from bnpg.oracle import enumerate_psne, min_epsilon_profile

from factories import heterogeneous, path_game, random_graph


def test_all_lazy_players_stop_in_one_sweep():
    inst = BnpgInstance.fully_homogeneous(Graph.cycle(5), [0, 0.5, 1.0, 1.5], 1.0)
    rng = np.random.default_rng(0)
    for start in ([1] * 5, [1, 0, 1, 0, 1], [0] * 5):
        assert asynchronous_br(inst, start, rng).tolist() == [0] * 5


def test_path_game_sweep_trace():
    x = asynchronous_br(path_game(), [0, 0, 0], np.random.default_rng(0))
    assert x.tolist() == [1, 1, 1]


def test_indifference_is_a_fair_coin():
    inst = BnpgInstance(Graph.empty(1), [1.0], ([0.0, 1.0],))
    rng = np.random.default_rng(12345)
    draws = [asynchronous_br(inst, [0], rng)[0] for _ in range(10_000)]
    assert abs(np.mean(draws) - 0.5) <= 0.02


def test_evolve_early_exit_at_psne():
    inst = BnpgInstance.fully_homogeneous(Graph.path(3), [0, 1, 2, 3], 2.0)
    x, eps = evolve(inst, [0, 0, 0], 5, np.random.default_rng(0))
    assert x.tolist() == [0, 0, 0] and eps == 0.0


def test_evolve_single_step_returns_start():
    inst = path_game()
    x, eps = evolve(inst, [0, 0, 0], 1, np.random.default_rng(0), normalized=False)
    assert x.tolist() == [0, 0, 0]
    assert eps == max_epsilon(inst, [0, 0, 0])


def test_evolve_keeps_best_visited_state():
    inst = path_game()
    x, eps = evolve(inst, [0, 0, 0], 8, np.random.default_rng(0), normalized=False)
    assert eps == min_epsilon_profile(inst)[1] == 0.5


def test_path_game_dynamics_cycle():
    # no player is ever indifferent, so sweeps are deterministic and every
    # start falls into the 2-cycle 111 <-> 100, where epsilon is 1.5
    inst = path_game()
    rng = np.random.default_rng(0)
    assert asynchronous_br(inst, [1, 1, 1], rng).tolist() == [1, 0, 0]
    assert asynchronous_br(inst, [1, 0, 0], rng).tolist() == [1, 1, 1]
    assert max_epsilon(inst, [1, 0, 0]) == max_epsilon(inst, [1, 1, 1]) == 1.5


def test_heuristic_on_path_game():
    inst = path_game()
    low = {(0, 0, 0), (1, 1, 0)}
    for seed in range(20):
        start = tuple(np.random.default_rng([seed, 0]).integers(0, 2, 3).tolist())
        rep = find_approx_psne(inst, HeuristicParams(seed=seed, normalized=False))
        assert rep.status is Status.APPROX
        assert rep.epsilon == (0.5 if start in low else 1.5)
        assert rep.epsilon >= min_epsilon_profile(inst)[1]


def test_immediate_psne_needs_no_rounds():
    # every player is indifferent everywhere, so every start is a PSNE
    inst = BnpgInstance.fully_homogeneous(Graph.path(4), [0, 0, 0, 0], 0.0)
    rep = find_approx_psne(inst, HeuristicParams(K=1, B=1))
    assert rep.status is Status.PSNE and rep.diagnostics["iterations"] == 0


def test_params_validation():
    for bad in ({"K": 0}, {"B": 0}, {"delta": 0.0}, {"p": 0.5}, {"seed": -1}):
        with pytest.raises(ValueError):
            HeuristicParams(**bad)


def test_deterministic_per_seed():
    inst = gen_utilities(gen_graph(GraphSpec("barabasi_albert", 200, seed=1)),
                         UtilityFamilyParams(0.5), seed=2)
    a = find_approx_psne(inst, HeuristicParams(seed=7))
    b = find_approx_psne(inst, HeuristicParams(seed=7))
    assert a.profile.tolist() == b.profile.tolist() and a.epsilon == b.epsilon


@pytest.mark.parametrize("gamma", [0.0, 1.0])
def test_pure_families_reach_exact_equilibria(gamma):
    for seed in range(5):
        inst = gen_utilities(gen_graph(GraphSpec("barabasi_albert", 300, seed=seed)),
                             UtilityFamilyParams(gamma), seed=seed)
        rep = find_approx_psne(inst, HeuristicParams(seed=seed))
        assert rep.status is Status.PSNE and is_psne(inst, rep.profile)


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_reported_epsilon_is_the_profile_epsilon(seed):
    rng = np.random.default_rng(seed)
    inst = heterogeneous(random_graph(int(rng.integers(1, 9)), rng), rng)
    rep = find_approx_psne(inst, HeuristicParams(seed=int(rng.integers(0, 1000)), B=5))
    assert rep.epsilon == max_epsilon(inst, rep.profile, normalized=True)
    assert (rep.status is Status.PSNE) == is_psne(inst, rep.profile)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_evolve_never_worse_than_start(seed):
    rng = np.random.default_rng(seed)
    inst = heterogeneous(random_graph(int(rng.integers(1, 9)), rng), rng)
    x = rng.integers(0, 2, inst.n)
    y, eps = evolve(inst, x, int(rng.integers(1, 6)), rng)
    assert eps <= max_epsilon(inst, x, normalized=True)
    assert eps == max_epsilon(inst, y, normalized=True)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_strict_equilibria_are_sweep_fixed_points(seed):
    rng = np.random.default_rng(seed)
    inst = heterogeneous(random_graph(int(rng.integers(1, 9)), rng), rng)
    for x in enumerate_psne(inst):
        counts = inst.graph.matrix @ x
        strict = all(inst.deltas[i, counts[i]] != inst.costs[i] for i in range(inst.n))
        if strict:
            assert asynchronous_br(inst, x, rng).tolist() == x.tolist()
