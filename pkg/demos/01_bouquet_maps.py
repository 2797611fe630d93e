# Six rotation systems of the bouquet B2, their surfaces, and the classes
# they fall into once loop swaps and mirror images are identified.
from rotamap.faces import euler, face_lines, trace_faces
from rotamap.graph import make_family
from rotamap.maps import count_map_classes, enumerate_maps, map_classes

b2 = make_family("bouquet", 2)  # one node, two loops a=0 and b=1

# every map lists the star of node 0 in rotation order
for i, m in enumerate(enumerate_maps(b2)):
    rep = euler(b2, m)
    rot = " ".join(f"{d.sense.name.lower()}{d.edge}" for d in m[0].order)
    print(f"map {i}: ({rot})  faces={rep.faces} chi={rep.chi} genus={rep.genus}")

# the torus map has a single face of degree 4
torus = next(m for m in enumerate_maps(b2) if euler(b2, m).chi == 0)
print("\n".join(face_lines(b2, trace_faces(b2, torus))))

print("classes, automorphisms only:", count_map_classes(b2, with_mirror=False))
print("classes, with mirror images:", count_map_classes(b2))
for cls in map_classes(b2):
    print("  class of size", len(cls), "chi", euler(b2, cls[0]).chi)
