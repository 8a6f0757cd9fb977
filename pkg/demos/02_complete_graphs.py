"""
Complete graphs
===============

When everybody sees everybody, a profile is described by its investor count
``k``. Each ``k`` is either impossible, pins down the investors, or leaves a
family of choices among indifferent players.
"""
import numpy as np

from bnpg import (BnpgInstance, Graph, classify_k_psne, iminus, iplus, simple_sort,
                  social_welfare, socially_optimal_complete, solve_complete)
from bnpg.oracle import best_psne_welfare

game = BnpgInstance.homogeneous(Graph.complete(3), np.cumsum([0.0, 0.4, 0.6, 0.2]),
                                [0.1, 0.5, 0.9])
for k in range(1, 3):
    print(f"k={k}: I+ = {sorted(iplus(game, k))}, I- = {sorted(iminus(game, k))}, "
          f"class = {classify_k_psne(game, k).status}")

print("sweep over k:", solve_complete(game).profile)
print("cheapest-first greedy:", simple_sort(game).profile)

##############################################################################
# Greedy is always an equilibrium for shared ``g`` but not always the best one.
rng = np.random.default_rng(0)
n = 40
g = np.concatenate([[0.0], np.cumsum(rng.uniform(0, 1, n))])
costs = rng.uniform(0, 1, n)
big = BnpgInstance.homogeneous(Graph.complete(n), g, costs)
greedy = simple_sort(big).profile
best = socially_optimal_complete(big)
print(f"n={n}: greedy welfare {social_welfare(big, greedy):.3f}, "
      f"best equilibrium welfare {best.diagnostics['welfare']:.3f} with k={best.profile.sum()}")

small = BnpgInstance.homogeneous(Graph.complete(3), np.cumsum([0, 1.0, 0.1, 0.1]), [0.9] * 3)
print("oracle agrees on a small case:", best_psne_welfare(small)[1],
      social_welfare(small, socially_optimal_complete(small).profile))
