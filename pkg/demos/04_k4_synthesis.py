# Build K4 from a triangle by two path additions and print each planar
# state; the final embedding is written out as a dot drawing.
import sys

from rotamap.export import export_drawing
from rotamap.faces import face_lines
from rotamap.synthesis import AdditionStep, run_synthesis

script = [
    AdditionStep("path", face=0, u=0, v=1, length=2),  # 0 -> 3 -> 1 across the inner face
    AdditionStep("path", face=2, u=3, v=1, length=1),  # 3 -> 2 splits the quadrilateral
]
states = run_synthesis(("cycle", 3), script)

for i, s in enumerate(states):
    n, e, f = s.counts
    print(f"state {i}: n={n} e={e} f={f} chi={s.chi} outer face={s.outer}")
    for line in face_lines(s.graph, list(s.faces)):
        print("   ", line)

final = states[-1]
if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write(export_drawing(final.graph, final.map, final.faces))
    print("drawing written to", sys.argv[1])
else:
    print(export_drawing(final.graph, final.map, final.faces))
