# The full census: every connected graph with at most 4 nodes and 5 edges,
# every rotation system, oracle verdict against chi = 2.  About a minute or two.
import sys
import time

from rotamap.analysis import iter_small_graphs
from rotamap.io import dumps_map
from rotamap.homotopy import oracle_census

nodes, edges = (int(a) for a in sys.argv[1:3]) if len(sys.argv) > 2 else (4, 5)
t = time.time()
res = oracle_census(iter_small_graphs(nodes, edges))
print(f"graphs={res.graphs} maps={res.maps} spherical={res.spherical} oracle runs={res.oracle_runs}")
print(f"disagreements={len(res.disagreements)} time={time.time() - t:.1f}s")
for g, m, by_euler, by_oracle in res.disagreements[:10]:
    print(g.edges, dumps_map(m), by_euler, by_oracle)
