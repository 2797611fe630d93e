"""Path and spike additions, face division and planar synthesis.

A path addition joins two boundary positions ``u`` and ``v`` of a face by a
fresh path; a spike hangs a fresh path off one position.  Non-simple
additions attach ``U(p)``, a forward and a backward edge per segment.

Fresh nodes and edges are appended after the existing ones.  For a path of
length ``L`` with nodes ``p_0 = u, p_1, ..., p_L = v`` the simple variant
adds edges ``e_i = (p_i, p_{i+1})``; the non-simple variant adds
``f_i = (p_i, p_{i+1})`` then ``g_i = (p_{i+1}, p_i)`` for each ``i``.

Every state produced here is re-traced and checked; nothing about the new
faces is trusted to bookkeeping.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .cyclic import CyclicStruct
from .errors import InvariantViolation, PositionNotOnFace, ZeroLength
from .faces import Face, cw_darts, euler, face_index, trace_faces
from .graph import Dart, Graph, inn, is_connected, make_family, out, u_cycle
from .maps import RotationSystem, build_map

KINDS = ("path", "spike")


@dataclass(frozen=True)
class AdditionStep:
    kind: str
    face: int
    u: int
    v: Optional[int] = None
    length: int = 1
    simple: bool = True

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown addition kind {self.kind!r}")
        if self.length < 1:
            raise ZeroLength(f"addition length must be at least 1, got {self.length}")
        if self.kind == "path" and self.v is None:
            raise ValueError("a path addition needs both u and v")
        if self.kind == "spike" and self.v is not None:
            raise ValueError("a spike has no v position")


@dataclass(frozen=True)
class PlanarState:
    graph: Graph
    map: RotationSystem
    faces: tuple[Face, ...]
    outer: int

    @property
    def counts(self) -> tuple[int, int, int]:
        return self.graph.node_count, self.graph.edge_count, len(self.faces)

    @property
    def chi(self) -> int:
        n, e, f = self.counts
        return n - e + f


def _check_length(length: int) -> None:
    if length < 1:
        raise ZeroLength(f"addition length must be at least 1, got {length}")


def _fresh_path(g: Graph, ends: Sequence[int], length: int, simple: bool) -> Graph:
    # ends = (u, v) for a path, (u,) for a spike
    n = g.node_count
    inner = length - 1 if len(ends) == 2 else length
    nodes = [ends[0]] + list(range(n, n + inner))
    if len(ends) == 2:
        nodes.append(ends[1])
    edges = list(g.edges)
    for i in range(length):
        a, b = nodes[i], nodes[i + 1]
        edges.append((a, b))
        if not simple:
            edges.append((b, a))
    return Graph(n + inner, edges)


def path_addition(g: Graph, u: int, v: int, length: int, simple: bool = True) -> Graph:
    """``g`` with a fresh path of ``length`` edges from ``u`` to ``v``."""
    g.check_node(u)
    g.check_node(v)
    _check_length(length)
    return _fresh_path(g, (u, v), length, simple)


def spike_addition(g: Graph, u: int, length: int, simple: bool = True) -> Graph:
    """``g`` with a fresh path of ``length`` edges hanging off ``u``."""
    g.check_node(u)
    _check_length(length)
    return _fresh_path(g, (u,), length, simple)


def _new_rotations(e0: int, n0: int, step: AdditionStep) -> tuple[list, list, dict]:
    """Darts inserted at u, at v, and rotations of the fresh nodes."""
    L = step.length
    spike = step.kind == "spike"
    inner = L if spike else L - 1
    fresh: dict[int, list[Dart]] = {}
    if step.simple:
        e = [e0 + i for i in range(L)]
        for i in range(1, inner + 1):
            x = n0 + i - 1
            fresh[x] = [inn(e[i - 1]), out(e[i])] if i < L else [inn(e[i - 1])]
        return [out(e[0])], ([] if spike else [inn(e[-1])]), fresh
    f = [e0 + 2 * i for i in range(L)]
    g = [e0 + 2 * i + 1 for i in range(L)]
    for i in range(1, inner + 1):
        x = n0 + i - 1
        if i < L:
            fresh[x] = [inn(f[i - 1]), out(f[i]), inn(g[i]), out(g[i - 1])]
        else:
            fresh[x] = [inn(f[i - 1]), out(g[i - 1])]
    at_u = [out(f[0]), inn(g[0])]
    at_v = [] if spike else [out(g[-1]), inn(f[-1])]
    return at_u, at_v, fresh


def _insert_after(order: list[Dart], anchor: Optional[Dart], new: list[Dart]) -> list[Dart]:
    if anchor is None:
        return order + new
    k = order.index(anchor) + 1
    return order[:k] + new + order[k:]


def _resolve(state: PlanarState, step: AdditionStep) -> tuple[Face, list[int]]:
    if not 0 <= step.face < len(state.faces):
        raise PositionNotOnFace(f"face {step.face} does not exist ({len(state.faces)} faces)")
    face = state.faces[step.face]
    positions = [step.u] if step.v is None else [step.u, step.v]
    for p in positions:
        if not 0 <= p < face.positions:
            raise PositionNotOnFace(f"position {p} not on face {step.face} of degree {face.degree}")
    return face, positions


def _entering(face: Face, pos: int) -> Optional[Dart]:
    # the boundary dart arriving at position pos; None on a degenerate face
    return face.boundary[pos - 1] if face.boundary else None


def face_division(state: PlanarState, step: AdditionStep) -> PlanarState:
    """Extend the map across one face and return the re-traced planar state.

    At ``u`` the first new dart goes right after ``reverse(a)`` in the
    rotation, ``a`` being the boundary dart entering position ``u``; the
    same at ``v``.  Raises :class:`InvariantViolation` when the re-traced
    result breaks any expected property.
    """
    face, positions = _resolve(state, step)
    g, m = state.graph, state.map
    u = face.nodes[step.u]
    if step.kind == "path":
        v = face.nodes[step.v]
        g2 = path_addition(g, u, v, step.length, step.simple)
    else:
        v = None
        g2 = spike_addition(g, u, step.length, step.simple)
    at_u, at_v, fresh = _new_rotations(g.edge_count, g.node_count, step)

    rotations = [list(r.order) for r in m.rotations]
    a = _entering(face, step.u)
    anchor_u = a.reverse() if a is not None else None
    if v is not None and step.u == step.v:
        rotations[u] = _insert_after(rotations[u], anchor_u, at_u + at_v)
    else:
        rotations[u] = _insert_after(rotations[u], anchor_u, at_u)
        if v is not None:
            b = _entering(face, step.v)
            rotations[v] = _insert_after(rotations[v], b.reverse() if b is not None else None, at_v)
    for x in range(g.node_count, g2.node_count):
        rotations.append(fresh[x])
    m2 = build_map(g2, rotations)
    faces2 = tuple(trace_faces(g2, m2))

    if step.face == state.outer:
        marker = face.boundary[step.u] if face.boundary else at_u[0]
    else:
        marker = state.faces[state.outer].boundary[0]
    outer = face_index(list(faces2))[marker]
    new = PlanarState(g2, m2, faces2, outer)
    _check_division(state, new, step, face, u, v, at_u)
    return new


def expected_deltas(step: AdditionStep) -> tuple[int, int, int]:
    """(nodes, edges, faces) added by a legal step."""
    L = step.length
    nodes = L if step.kind == "spike" else L - 1
    if step.simple:
        return nodes, L, 0 if step.kind == "spike" else 1
    return nodes, 2 * L, L if step.kind == "spike" else L + 1


def _cyclic_keys(faces) -> set:
    keys = set()
    for f in faces:
        b = f.boundary if isinstance(f, Face) else tuple(f)
        if b:
            k = b.index(min(b))
            keys.add(b[k:] + b[:k])
    return keys


def _fail(msg: str):
    raise InvariantViolation(msg)


def _check_division(old: PlanarState, new: PlanarState, step: AdditionStep, face: Face, u, v, at_u) -> None:
    dn, de, df = expected_deltas(step)
    n0, e0, f0 = old.counts
    n1, e1, f1 = new.counts
    if (n1 - n0, e1 - e0, f1 - f0) != (dn, de, df):
        _fail(f"count deltas {(n1 - n0, e1 - e0, f1 - f0)} differ from expected {(dn, de, df)}")
    if new.chi != 2:
        _fail(f"chi = {new.chi} after {step}")
    if not is_connected(new.graph):
        _fail("result is not connected")
    touched = {u} if v is None else {u, v}
    fresh_edges = set(range(old.graph.edge_count, new.graph.edge_count))
    for x, rot in enumerate(old.map.rotations):
        kept = tuple(d for d in new.map.rotations[x].order if d.edge not in fresh_edges)
        if x not in touched and new.map.rotations[x] != rot:
            _fail(f"rotation at untouched node {x} changed")
        if CyclicStruct(kept) != rot:
            _fail(f"rotation at node {x} lost its old cyclic order")
    old_keys = _cyclic_keys(f for i, f in enumerate(old.faces) if i != step.face)
    if not old_keys <= _cyclic_keys(new.faces):
        _fail("a face other than the divided one changed")
    if step.simple:
        p = tuple(out(e) for e in range(old.graph.edge_count, new.graph.edge_count))
        back = tuple(d.reverse() for d in reversed(p))
        if step.kind == "path":
            first = cw_darts(face, step.u, step.v) if step.u != step.v else ()
            second = cw_darts(face, step.v, step.u)
            want = {first + back, p + second}
        else:
            want = {p + back + cw_darts(face, step.u, step.u)}
        if not _cyclic_keys(want) <= _cyclic_keys(new.faces):
            _fail(f"traced faces do not contain the expected boundaries after {step}")
    if step.kind == "spike" and step.simple:
        grown = next(f for f in new.faces if at_u[0] in f.boundary)
        if grown.degree != face.degree + 2 * step.length:
            _fail("spike did not grow its face by twice its length")


def check_state(state: PlanarState) -> None:
    """Raise :class:`InvariantViolation` unless the state is a planar map
    with a valid outer face and faces matching a fresh trace."""
    rep = euler(state.graph, state.map)
    if rep.chi != 2:
        _fail(f"chi = {rep.chi}, not a spherical map")
    if not 0 <= state.outer < len(state.faces):
        _fail(f"outer face {state.outer} out of range")
    if tuple(trace_faces(state.graph, state.map)) != state.faces:
        _fail("stored faces differ from a fresh trace")


def _cycle_map(n: int, symmetric: bool) -> RotationSystem:
    if not symmetric:
        g = make_family("cycle", n)
        # every node of C_n has a star of two darts: one rotation each
        return build_map(g, [[out(i), inn((i - 1) % n)] for i in range(n)])
    g = u_cycle(n)
    # f_i = edge i runs i -> i+1, g_i = edge n+i runs i+1 -> i
    rot = []
    for i in range(n):
        j = (i - 1) % n
        rot.append([inn(j), out(i), inn(n + i), out(n + j)])
    return build_map(g, rot)


def base_state(kind: str, n: int) -> PlanarState:
    """The planar map of ``C_n`` (``kind="cycle"``) or ``U(C_n)``
    (``kind="u_cycle"``), outer face the one holding ``Dart(0, IN)``."""
    if n < 1:
        raise ValueError("the base cycle needs at least one node")
    if kind == "cycle":
        g = make_family("cycle", n)
        m = _cycle_map(n, False)
    elif kind == "u_cycle":
        g = u_cycle(n)
        m = _cycle_map(n, True)
    else:
        raise ValueError(f"unknown base {kind!r}")
    faces = tuple(trace_faces(g, m))
    state = PlanarState(g, m, faces, face_index(list(faces))[inn(0)])
    check_state(state)
    return state


def run_synthesis(base: tuple[str, int] | PlanarState, script: Sequence[AdditionStep]) -> list[PlanarState]:
    """All states of a synthesis, the base state first."""
    state = base if isinstance(base, PlanarState) else base_state(*base)
    states = [state]
    for step in script:
        state = face_division(state, step)
        states.append(state)
    return states


def random_step(
    state: PlanarState,
    rng: random.Random,
    kinds: Sequence[str] = KINDS,
    simple: Optional[bool] = None,
    max_length: int = 3,
    distinct_nodes: bool = False,
) -> AdditionStep:
    """A legal step drawn at random.

    ``distinct_nodes`` forces paths between two different nodes (as in a
    Whitney synthesis); faces with a single node are then skipped.
    """
    kind = rng.choice(list(kinds))
    is_simple = rng.choice([True, False]) if simple is None else simple
    length = rng.randint(1, max_length)
    if kind == "spike":
        fi = rng.randrange(len(state.faces))
        return AdditionStep("spike", fi, rng.randrange(state.faces[fi].positions), None, length, is_simple)
    choices = []
    for fi, f in enumerate(state.faces):
        for a in range(f.positions):
            for b in range(f.positions):
                if distinct_nodes and f.nodes[a] == f.nodes[b]:
                    continue
                choices.append((fi, a, b))
    fi, a, b = rng.choice(choices)
    return AdditionStep("path", fi, a, b, length, is_simple)


def random_script(
    base: tuple[str, int],
    rng: random.Random,
    steps: int,
    **kwargs,
) -> tuple[list[AdditionStep], list[PlanarState]]:
    """Draw and apply ``steps`` random steps; returns the script and states."""
    state = base_state(*base)
    states, script = [state], []
    for _ in range(steps):
        step = random_step(state, rng, **kwargs)
        state = face_division(state, step)
        script.append(step)
        states.append(state)
    return script, states
