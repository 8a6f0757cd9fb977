"""
Strictly convex shared utilities and the k-core
===============================================

With strictly increasing marginal benefit, investing pays once a player has
``k`` investing neighbours. The largest set where everyone has ``k``
neighbours inside it is the k-core, found by repeatedly deleting low-degree
nodes.
"""
from bnpg import BnpgInstance, Graph, k_core, solve_fully_homogeneous_convex, threshold_k
from bnpg.generators import GraphSpec, gen_graph
from bnpg.oracle import enumerate_psne

graph = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
game = BnpgInstance.fully_homogeneous(graph, [0, 1, 3, 7, 15], 3.0)
print("threshold:", threshold_k(game))
print("2-core:", sorted(k_core(graph, 2)))
rep = solve_fully_homogeneous_convex(game)
print("solver:", rep.profile, "alternatives:", [x.tolist() for x in rep.alternatives])
print("oracle:", [x.tolist() for x in enumerate_psne(game)])

##############################################################################
# Every node of this preferential-attachment graph arrives with 4 links, so
# its 4-core is the whole graph and its 5-core is empty: investment collapses
# once the cost pushes the threshold past 4.
ba = gen_graph(GraphSpec("barabasi_albert", 2000, m=4, seed=3))
g = [2.0 ** t - 1 for t in range(ba.max_degree + 2)]
for c in (0.5, 1.5, 3.0, 6.0, 12.0, 20.0):
    rep = solve_fully_homogeneous_convex(BnpgInstance.fully_homogeneous(ba, g, c))
    print(f"c={c}: threshold {rep.diagnostics['threshold']}, investors {rep.profile.sum()}")
