"""
Real networks from edge lists
=============================

Social-network snapshots usually ship as whitespace-separated id pairs. We
write a synthetic one of similar size, load it back, and solve.
"""
import tempfile
import time
from pathlib import Path

from bnpg import HeuristicParams, find_approx_psne
from bnpg.generators import (GraphSpec, UtilityFamilyParams, clustering, gen_graph,
                             gen_utilities, load_edge_list, write_edge_list)

path = Path(tempfile.mkdtemp()) / "snapshot.txt"
write_edge_list(gen_graph(GraphSpec("barabasi_albert", 4093, m=22, seed=0)), path)
graph = load_edge_list(path, largest_component=True)
print(f"{graph.n} nodes, {graph.num_edges} edges, clustering {clustering(graph):.3f}")
for gamma in (0.2, 0.5, 0.8):
    game = gen_utilities(graph, UtilityFamilyParams(gamma), seed=1)
    start = time.perf_counter()
    rep = find_approx_psne(game, HeuristicParams(seed=0))
    print(f"gamma={gamma}: {rep.status.value}, epsilon {rep.epsilon:.4f}, "
          f"{time.perf_counter() - start:.2f}s")
