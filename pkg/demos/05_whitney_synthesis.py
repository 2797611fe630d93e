# Random non-simple path additions from U(C3): every graph stays
# biconnected and planar; face degree statistics gathered with numpy.
import random

import numpy as np

from rotamap.graph import is_biconnected
from rotamap.synthesis import expected_deltas, random_script

rng = random.Random(2024)
degrees = []
for run in range(20):
    script, states = random_script(("u_cycle", 3), rng, 4, kinds=("path",), simple=False, distinct_nodes=True)
    assert all(is_biconnected(s.graph) for s in states)
    assert all(s.chi == 2 for s in states)
    degrees += [f.degree for f in states[-1].faces]
    if run < 3:
        for step, s in zip(script, states[1:]):
            print(f"  {step.kind} len={step.length} face={step.face} -> counts {s.counts} deltas {expected_deltas(step)}")
        print()

d = np.array(degrees)
print("final faces:", d.size, "mean degree %.2f" % d.mean(), "max", d.max())
values, counts = np.unique(d, return_counts=True)
print("degree histogram:", dict(zip(values.tolist(), counts.tolist())))
