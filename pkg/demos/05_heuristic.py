"""
General graphs: best-response search
====================================

Without structure we run sequential best-response sweeps, keep the profile
with the smallest epsilon, and restart from it until it stops moving.
"""
import numpy as np

from bnpg import BnpgInstance, Graph, HeuristicParams, find_approx_psne
from bnpg.generators import GraphSpec, UtilityFamilyParams, gen_graph, gen_utilities

graph = gen_graph(GraphSpec("barabasi_albert", 500, m=3, seed=0))
for gamma in (0.0, 0.5, 1.0):
    eps = []
    exact = 0
    for seed in range(20):
        game = gen_utilities(graph, UtilityFamilyParams(gamma), seed=seed)
        rep = find_approx_psne(game, HeuristicParams(seed=seed))
        eps.append(rep.epsilon)
        exact += rep.status.value == "psne"
    print(f"gamma={gamma}: {exact}/20 exact, worst normalized epsilon {max(eps):.4f}")

##############################################################################
# A game with no equilibrium: the dynamics cycle and the best visited state
# is returned.
path = BnpgInstance.homogeneous(Graph.path(3), [4.5, 6.0, 9.5, 10.0], [1.0, 2.0, 3.0])
for seed in range(4):
    rep = find_approx_psne(path, HeuristicParams(seed=seed, normalized=False))
    print(f"seed {seed}: {rep.status.value}, profile {rep.profile}, epsilon {rep.epsilon}")
