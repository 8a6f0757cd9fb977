"""
Trees
=====

On a tree, each node summarises which of its own actions are compatible with
each parent action, and how many of its children then need to invest. A
second pass from the root reads off one equilibrium.
"""
import time

import numpy as np

from bnpg import BnpgInstance, Graph, is_psne, solve_tree
from bnpg.generators import GraphSpec, UtilityFamilyParams, gen_graph, gen_utilities
from bnpg.tree import downstream_pass, root_and_order

star = Graph.star(4)
best_shot = BnpgInstance.homogeneous(star, [0, 1, 1, 1, 1], [0.5] * 4)
dec = root_and_order(star)
for table in downstream_pass(best_shot, dec):
    print(f"node {table.node}: (parent, own, children investing) = {table.entries()}")
print("equilibrium:", solve_tree(best_shot).profile)

##############################################################################
# The same method scales linearly.
tree = gen_graph(GraphSpec("random_tree", 100_000, seed=1))
game = gen_utilities(tree, UtilityFamilyParams(0.0), seed=2)
start = time.perf_counter()
rep = solve_tree(game)
print(f"n=100000: {rep.status.value} in {time.perf_counter() - start:.2f}s")
if rep.profile is not None:
    print("verified:", is_psne(game, rep.profile), "invest ratio", np.mean(rep.profile))
