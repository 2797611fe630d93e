"""Graphviz dot export of an embedded graph.

The rotation at each node goes into a comment.  Each face gets one colour,
and an edge is drawn in two colours: the face of its Out dart, then the
face of its In dart.
"""
from __future__ import annotations

from typing import Sequence

from .faces import Face, dart_label, face_index
from .graph import Graph, inn, out
from .maps import RotationSystem


def face_colour(i: int, total: int) -> str:
    """An HSV colour string, hues spread evenly over the faces."""
    return f"{i / max(total, 1):.3f} 0.700 0.850"


def export_drawing(g: Graph, m: RotationSystem, faces: Sequence[Face]) -> str:
    index = face_index(list(faces))
    total = len(faces)
    lines = ["digraph embedding {", "  node [shape=circle];"]
    for i, f in enumerate(faces):
        walk = " ".join(dart_label(g, d) for d in f.boundary) or f"<{f.nodes[0]}>"
        lines.append(f"  // face {i} colour \"{face_colour(i, total)}\": {walk}")
    degenerate = {f.nodes[0]: i for i, f in enumerate(faces) if not f.boundary}
    for x in g.nodes():
        rot = " ".join(f"[{d.sense.name.lower()},{d.edge}]" for d in m.rotations[x].order)
        lines.append(f"  // rotation {x}: ({rot})")
        if x in degenerate:
            colour = face_colour(degenerate[x], total)
            lines.append(f"  {x} [style=filled, fillcolor=\"{colour}\"];")
        else:
            lines.append(f"  {x};")
    for e, (s, t) in enumerate(g.edges):
        left = face_colour(index[out(e)], total)
        right = face_colour(index[inn(e)], total)
        lines.append(f"  {s} -> {t} [label=\"e{e}\", color=\"{left}:{right}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
