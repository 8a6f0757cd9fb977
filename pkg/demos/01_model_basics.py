"""
The model in five minutes
=========================

Players sit on a graph and either invest (1) or not (0). A player's payoff is
``g_i(x_i + n_i) - c_i x_i`` where ``n_i`` counts investing neighbours, so
investing pays exactly when ``Δg_i(n_i) >= c_i``.
"""
import itertools

import numpy as np

from bnpg import (BnpgInstance, Graph, deviation_gains, is_psne, max_epsilon, social_welfare,
                  utility)
from bnpg.oracle import enumerate_psne, min_epsilon_profile

##############################################################################
# A three-player path with one shared externality table and distinct costs.
game = BnpgInstance.homogeneous(Graph.path(3), [4.5, 6.0, 9.5, 10.0], [1.0, 2.0, 3.0])
print("Δg:", np.diff(game.common_table()))
print("middle player's utility at 101:", utility(game, [1, 0, 1], 1))

##############################################################################
# Walk every profile: nobody is ever happy all at once.
for bits in itertools.product((0, 1), repeat=3):
    x = np.array(bits)
    print("".join(map(str, bits)), "psne" if is_psne(game, x) else "    ",
          "gains", deviation_gains(game, x), "eps", max_epsilon(game, x),
          "welfare", social_welfare(game, x))

print("equilibria:", enumerate_psne(game))
x, eps = min_epsilon_profile(game)
print("closest to equilibrium:", x, "with epsilon", eps)
