# K33 drawn on the torus: trace its three faces, then check that none of
# its 64 rotation systems is planar.
import collections

from rotamap.faces import euler, face_lines, trace_faces
from rotamap.graph import inn, make_family, out
from rotamap.maps import build_map, enumerate_maps

g = make_family("k33")  # edges (0,3) (0,4) (0,5) (1,3) ... one arrow per pair

m = build_map(g, [
    [out(0), out(1), out(2)],
    [out(3), out(5), out(4)],
    [out(7), out(8), out(6)],
    [inn(6), inn(3), inn(0)],
    [inn(1), inn(4), inn(7)],
    [inn(5), inn(2), inn(8)],
])

for line in face_lines(g, trace_faces(g, m)):
    print(line)
rep = euler(g, m)
print(f"n={rep.nodes} e={rep.edges} f={rep.faces} chi={rep.chi} genus={rep.genus}")

# genus distribution over all maps; no map reaches genus 0
genus = collections.Counter(euler(g, mm).genus for mm in enumerate_maps(g))
print("maps by genus:", dict(sorted(genus.items())))
