"""
Hardness gadgets as fixtures
============================

Two constructions tie equilibrium existence to classic graph problems. We
build them on small graphs and compare against brute force.
"""
import itertools

from bnpg import Graph
from bnpg.generators import independent_set_gadget, three_ris_gadget
from bnpg.oracle import enumerate_psne

k3 = Graph.complete(3)
for k in (1, 2):
    print(f"K3 with apex, k={k}: equilibrium exists = "
          f"{bool(enumerate_psne(independent_set_gadget(k3, k)))}")
print("3 isolated nodes, k=3:", bool(enumerate_psne(independent_set_gadget(Graph.empty(3), 3))))

##############################################################################
# Investors of a non-trivial equilibrium form a 3-regular induced subgraph.
k4_pendant = Graph.from_edges(5, list(itertools.combinations(range(4), 2)) + [(3, 4)])
for name, base in (("K4 + pendant", k4_pendant), ("path of 4", Graph.path(4)),
                   ("K4", Graph.complete(4))):
    game = three_ris_gadget(base)
    found = [x.tolist() for x in enumerate_psne(game) if 0 < x.sum() < game.n]
    print(f"{name}: non-trivial equilibria {found}")
bare = three_ris_gadget(Graph.complete(4), pad=False)
print("K4 without the padding player:", [x.tolist() for x in enumerate_psne(bare)])
