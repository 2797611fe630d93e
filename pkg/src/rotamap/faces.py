"""Face tracing, face verification, boundary walks and Euler characteristic.

The face permutation sends a dart ``d`` to ``phi_{head(d)}(reverse(d))``:
arrive at a node along ``d``, turn around, and leave along the next dart of
the rotation there.  Faces are its orbits.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidMap, NotConnected, PositionOutOfRange
from .graph import Dart, Graph, Walk, is_connected, stars
from .maps import RotationSystem


@dataclass(frozen=True)
class Face:
    """A closed boundary walk; ``nodes[i]`` is the tail of ``boundary[i]``.

    A degenerate face (an isolated node, the face of K_1) has an empty
    boundary and a single entry in ``nodes``.
    """

    boundary: tuple[Dart, ...]
    nodes: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.boundary)

    @property
    def positions(self) -> int:
        return len(self.nodes)

    def __len__(self):
        return len(self.boundary)

    def __contains__(self, d) -> bool:
        return d in self.boundary

    def key(self) -> tuple:
        """Boundary rotated to start at its smallest dart."""
        if not self.boundary:
            return ((), self.nodes)
        k = self.boundary.index(min(self.boundary))
        return (self.boundary[k:] + self.boundary[:k], ())


@dataclass(frozen=True)
class EulerReport:
    nodes: int
    edges: int
    faces: int
    chi: int
    genus: int
    spherical_by_euler: bool


def check_map(g: Graph, m: RotationSystem) -> None:
    if len(m.rotations) != g.node_count:
        raise InvalidMap(f"map has {len(m.rotations)} rotations for {g.node_count} nodes")
    for x, s in enumerate(stars(g)):
        if m.rotations[x].elements != frozenset(s):
            raise InvalidMap(f"rotation at node {x} does not cover its star")


def face_successor(g: Graph, m: RotationSystem, d: Dart) -> Dart:
    return m.rotate(d.reverse())


def face_permutation(g: Graph, m: RotationSystem) -> dict[Dart, Dart]:
    check_map(g, m)
    return {d: m.rotate(d.reverse()) for d in g.darts()}


def trace_faces(g: Graph, m: RotationSystem) -> list[Face]:
    """Orbits of the face permutation, each started at its smallest dart,
    followed by one degenerate face per node with an empty star."""
    nxt = face_permutation(g, m)
    seen: set[Dart] = set()
    faces = []
    for d0 in g.darts():
        if d0 in seen:
            continue
        orbit = []
        d = d0
        while d not in seen:
            seen.add(d)
            orbit.append(d)
            d = nxt[d]
        faces.append(Face(tuple(orbit), tuple(g.tail(d) for d in orbit)))
    for x, s in enumerate(stars(g)):
        if not s:
            faces.append(Face((), (x,)))
    return faces


def face_index(faces: list[Face]) -> dict[Dart, int]:
    return {d: i for i, f in enumerate(faces) for d in f.boundary}


def verify_face(g: Graph, m: RotationSystem, face: Face) -> bool:
    """Check a candidate face against a map.

    edge-injective: no dart is used twice;
    star-compatible: the boundary is empty only at a node whose star is empty;
    corner-compatible: each dart is followed by phi_{head}(reverse(dart)).
    """
    b = face.boundary
    if not b:
        if len(face.nodes) != 1 or not 0 <= face.nodes[0] < g.node_count:
            return False
        return not any(x == face.nodes[0] for e in g.edges for x in e)
    if len(set(b)) != len(b) or len(face.nodes) != len(b):
        return False
    if any(not 0 <= d.edge < g.edge_count for d in b):
        return False
    n = len(b)
    for i, d in enumerate(b):
        nxt = b[(i + 1) % n]
        if g.tail(d) != face.nodes[i] or g.tail(nxt) != g.head(d):
            return False
        try:
            if m.rotate(d.reverse()) != nxt:
                return False
        except KeyError:
            return False
    return True


def _check_position(face: Face, i: int) -> None:
    if not 0 <= i < face.positions:
        raise PositionOutOfRange(f"position {i} not on a face with {face.positions} positions")


def cw_darts(face: Face, i: int, j: int) -> tuple[Dart, ...]:
    """Boundary darts from position ``i`` forward to position ``j``; the whole
    boundary when ``i == j``."""
    b, n = face.boundary, face.degree
    if n == 0:
        return ()
    k = (j - i) % n or n
    return tuple(b[(i + t) % n] for t in range(k))


def ccw_darts(face: Face, i: int, j: int) -> tuple[Dart, ...]:
    """The complementary segment walked backwards; empty when ``i == j``."""
    if i == j:
        return ()
    return tuple(d.reverse() for d in reversed(cw_darts(face, j, i)))


def boundary_walks(face: Face, i: int, j: int) -> tuple[Walk, Walk]:
    """(cw, ccw) walks between two boundary positions."""
    _check_position(face, i)
    _check_position(face, j)
    x, y = face.nodes[i], face.nodes[j]
    cw = Walk(x, cw_darts(face, i, j), y)
    ccw = Walk(x, ccw_darts(face, i, j), y)
    return cw, ccw


def euler(g: Graph, m: RotationSystem) -> EulerReport:
    if not is_connected(g):
        raise NotConnected("Euler characteristic needs a connected graph")
    f = len(trace_faces(g, m))
    n, e = g.node_count, g.edge_count
    chi = n - e + f
    return EulerReport(n, e, f, chi, (2 - chi) // 2, chi == 2)


def dart_label(g: Graph, d: Dart) -> str:
    """``(xy)`` node-pair notation, or ``[sense,edge]`` when another dart shares
    the same tail and head (parallel edges, loops)."""
    x, y = g.tail(d), g.head(d)
    mult = g.multiplicity()
    same = mult[(x, y)] + mult[(y, x)] if x != y else 2 * mult[(x, x)]
    if same > 1:
        return f"[{d.sense.name.lower()},{d.edge}]"
    if x < 10 and y < 10:
        return f"({x}{y})"
    return f"({x},{y})"


def face_lines(g: Graph, faces: list[Face]) -> list[str]:
    lines = []
    for f in faces:
        if f.boundary:
            lines.append(f"{f.degree} " + " ".join(dart_label(g, d) for d in f.boundary))
        else:
            lines.append(f"0 <{f.nodes[0]}>")
    return lines
