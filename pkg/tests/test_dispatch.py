import itertools

import numpy as np

from bnpg import BnpgInstance, Graph, Status, choose_method, is_psne, solve
from bnpg.oracle import enumerate_psne

from factories import heterogeneous, path_game, random_tree


def test_near_misses_fall_through():
    rng = np.random.default_rng(0)
    k5_minus = Graph.from_edges(5, list(itertools.combinations(range(5), 2))[1:])
    assert choose_method(heterogeneous(k5_minus, rng)) == "oracle"
    tree_plus = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert choose_method(heterogeneous(tree_plus, rng)) == "oracle"
    linear = BnpgInstance.fully_homogeneous(tree_plus, [0, 1, 2, 3], 1.5)
    assert choose_method(linear) == "oracle"
    convex = BnpgInstance.fully_homogeneous(tree_plus, [0, 1, 3, 7], 1.5)
    assert choose_method(convex) == "kcore"
    forest = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert choose_method(heterogeneous(forest, rng)) == "oracle"


def test_order_of_preference():
    rng = np.random.default_rng(1)
    assert choose_method(heterogeneous(Graph.complete(4), rng)) == "complete"
    assert choose_method(path_game()) == "tree"
    big = heterogeneous(Graph.cycle(30), rng)
    assert choose_method(big) == "heuristic"
    assert choose_method(big, oracle_limit=30) == "oracle"


def test_auto_reports_agree_with_oracle():
    rng = np.random.default_rng(2)
    for _ in range(30):
        inst = heterogeneous(random_tree(int(rng.integers(1, 9)), rng), rng)
        rep = solve(inst)
        assert (rep.status is Status.PSNE) == bool(enumerate_psne(inst))
        if rep.profile is not None:
            assert is_psne(inst, rep.profile)
