# Walk homotopy along faces: a one-step rewrite on C4, two loops on the
# torus that no rewrite chain joins, and the oracle checked against Euler.
from rotamap.analysis import iter_small_graphs
from rotamap.faces import boundary_walks, trace_faces
from rotamap.graph import make_family, make_walk, out
from rotamap.homotopy import homotopic, oracle_census, replay, sphericity_report
from rotamap.maps import build_map, enumerate_maps

c4 = make_family("cycle", 4)
m = enumerate_maps(c4)[0]
face = trace_faces(c4, m)[0]
cw, ccw = boundary_walks(face, 0, 2)  # two ways round the square from 0 to 2
v = homotopic(c4, m, cw, ccw)
print("C4:", v.related, "witness", v.witness)
print("replay lands on ccw:", replay(c4, m, cw, v.witness) == ccw)

b2 = make_family("bouquet", 2)
torus = build_map(b2, [[(0, 0), (1, 0), (0, 1), (1, 1)]])
loop_a, loop_b = make_walk(b2, 0, [out(0)]), make_walk(b2, 0, [out(1)])
print("torus loops, search only:", homotopic(b2, torus, loop_a, loop_b, 8, prefilter=False).related)
print("torus loops, with homology check:", homotopic(b2, torus, loop_a, loop_b))

rep = sphericity_report(b2, torus)
print("torus spherical?", rep.spherical, "after", rep.pairs_checked, "walk pairs")

# oracle versus chi on every map of every connected graph up to 3 nodes, 4 edges
res = oracle_census(iter_small_graphs(3, 4))
print(f"{res.graphs} graphs, {res.maps} maps, {res.spherical} spherical, agree={res.agree}")
