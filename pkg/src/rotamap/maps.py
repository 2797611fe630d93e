"""Rotation systems (combinatorial maps): construction, enumeration, classes."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence, Union

from .cyclic import EMPTY, CyclicStruct, cycle_from_mapping
from .errors import DuplicateItem, NotSingleCycle, StarMismatch
from .graph import Dart, Graph, Sense, stars

RotationEntry = Union[CyclicStruct, Mapping, Sequence]


@dataclass(frozen=True)
class RotationSystem:
    """One cyclic structure per node, over exactly that node's star."""

    rotations: tuple[CyclicStruct, ...]
    _next: dict = field(init=False, repr=False, compare=False, hash=False)
    _prev: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        nxt, prv = {}, {}
        for rot in self.rotations:
            n = len(rot)
            for i, d in enumerate(rot.order):
                nxt[d] = rot.order[(i + 1) % n]
                prv[d] = rot.order[i - 1]
        object.__setattr__(self, "_next", nxt)
        object.__setattr__(self, "_prev", prv)

    def __len__(self):
        return len(self.rotations)

    def __getitem__(self, x: int) -> CyclicStruct:
        return self.rotations[x]

    def rotate(self, d: Dart) -> Dart:
        """phi_{tail(d)}(d): the dart after ``d`` around its tail node."""
        return self._next[d]

    def rotate_back(self, d: Dart) -> Dart:
        return self._prev[d]

    def key(self) -> tuple:
        return tuple(r.order for r in self.rotations)

    def restricted_to(self, nodes: int) -> tuple:
        return self.key()[:nodes]


def _single_rotation(g: Graph, x: int, entry: RotationEntry, expected: list[Dart]) -> CyclicStruct:
    if isinstance(entry, CyclicStruct):
        rot = entry
    elif isinstance(entry, Mapping):
        step = {Dart(a[0], Sense(a[1])): Dart(b[0], Sense(b[1])) for a, b in entry.items()}
        if set(step) != set(expected):
            raise StarMismatch(x)
        try:
            rot = cycle_from_mapping(step)
        except ValueError as exc:
            raise NotSingleCycle(x, f"rotation at node {x}: {exc}") from None
    else:
        try:
            rot = CyclicStruct(tuple(Dart(d[0], Sense(d[1])) for d in entry))
        except DuplicateItem:
            raise NotSingleCycle(x, f"rotation at node {x} lists a dart twice") from None
    if rot.elements != frozenset(expected):
        raise StarMismatch(x)
    return rot


def build_map(g: Graph, rotations: Sequence[RotationEntry]) -> RotationSystem:
    """Validate per-node rotations against the stars of ``g``.

    Each entry is a dart sequence in step order, an explicit permutation
    (mapping dart -> dart) or a ready :class:`CyclicStruct`.
    """
    if len(rotations) != g.node_count:
        raise StarMismatch(min(len(rotations), g.node_count), f"expected {g.node_count} rotations, got {len(rotations)}")
    st = stars(g)
    return RotationSystem(tuple(_single_rotation(g, x, entry, st[x]) for x, entry in enumerate(rotations)))


def map_count(g: Graph) -> int:
    return math.prod(math.factorial(max(len(s) - 1, 0)) for s in stars(g))


def iter_maps(g: Graph) -> Iterator[RotationSystem]:
    """Every rotation system of ``g``; the first star dart anchors each cycle."""
    per_node = []
    for s in stars(g):
        if not s:
            per_node.append([EMPTY])
            continue
        anchor, rest = s[0], s[1:]
        per_node.append([CyclicStruct((anchor,) + p) for p in itertools.permutations(rest)])
    for combo in itertools.product(*per_node):
        yield RotationSystem(tuple(combo))


def enumerate_maps(g: Graph) -> list[RotationSystem]:
    return list(iter_maps(g))


def transport_map(m: RotationSystem, node_map: Sequence[int], edge_map: Sequence[int]) -> RotationSystem:
    """Carry ``m`` along a graph isomorphism; darts keep their sense."""
    new: list = [None] * len(m.rotations)
    for x, rot in enumerate(m.rotations):
        new[node_map[x]] = CyclicStruct(tuple(Dart(edge_map[d.edge], d.sense) for d in rot.order))
    return RotationSystem(tuple(new))


def mirror(m: RotationSystem) -> RotationSystem:
    """The orientation-reversed map: every rotation runs backwards."""
    return RotationSystem(tuple(CyclicStruct(tuple(reversed(r.order))) for r in m.rotations))


def map_classes(g: Graph, with_mirror: bool = True) -> list[list[RotationSystem]]:
    """Orbits of the rotation systems of ``g`` under its automorphism group,
    together with orientation reversal unless ``with_mirror`` is false."""
    from .analysis import automorphisms

    autos = automorphisms(g)
    seen: set = set()
    orbits = []
    for m in iter_maps(g):
        if m.key() in seen:
            continue
        orbit = {}
        for base in (m, mirror(m)) if with_mirror else (m,):
            for iso in autos:
                image = transport_map(base, iso.node_map, iso.edge_map)
                orbit.setdefault(image.key(), image)
        seen.update(orbit)
        orbits.append(list(orbit.values()))
    return orbits


def count_map_classes(g: Graph, with_mirror: bool = True) -> int:
    return len(map_classes(g, with_mirror))


def rotation_array(g: Graph, m: RotationSystem) -> list[int]:
    """The rotation as a permutation of dart indices (``2 * edge + sense``)."""
    sigma = [0] * g.dart_count
    for rot in m.rotations:
        order = rot.order
        n = len(order)
        for i, d in enumerate(order):
            sigma[2 * d[0] + d[1]] = 2 * order[(i + 1) % n][0] + order[(i + 1) % n][1]
    return sigma


def embedding_key(g: Graph, m: RotationSystem) -> tuple:
    """Canonical form of the embedded graph, forgetting edge directions and labels.

    Two (graph, map) pairs get the same key iff some relabelling of darts
    carries one rotation onto the other while commuting with dart reversal.
    Each connected component is labelled breadth-first from every root dart
    and the least code wins; components are then sorted.
    """
    sigma = rotation_array(g, m)
    isolated = sum(1 for rot in m.rotations if not len(rot))
    seen = [False] * len(sigma)
    codes = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        comp = _component(sigma, start)
        for d in comp:
            seen[d] = True
        codes.append(min(_code(sigma, r) for r in comp))
    codes.sort()
    return (isolated, tuple(codes))


def _component(sigma: list[int], start: int) -> list[int]:
    out, stack, mark = [], [start], {start}
    while stack:
        d = stack.pop()
        out.append(d)
        for nb in (sigma[d], d ^ 1):
            if nb not in mark:
                mark.add(nb)
                stack.append(nb)
    return out


def _code(sigma: list[int], root: int) -> tuple:
    label = {root: 0}
    order = [root]
    i = 0
    while i < len(order):
        d = order[i]
        for nb in (sigma[d], d ^ 1):
            if nb not in label:
                label[nb] = len(order)
                order.append(nb)
        i += 1
    return tuple(label[sigma[d]] for d in order) + tuple(label[d ^ 1] for d in order)
