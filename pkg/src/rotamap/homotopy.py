"""Walk homotopy along the faces of a map, and a brute-force sphericity check.

One rewrite (``hcollapse``) replaces an occurrence of ``ccw_F(a, b)`` inside a
walk by ``cw_F(a, b)`` or the other way round, for a face ``F`` and boundary
positions ``a``, ``b``.  With ``a == b`` this inserts or deletes a whole face
boundary at a node.  Two walks are homotopic when a chain of rewrites joins
them; the search below only visits walks no longer than a length cap.

Walks on a common face boundary differ by a sum of face boundaries, so the
signed edge-count vector of ``w1`` minus that of ``w2`` is a rational
combination of face boundary vectors whenever ``w1`` and ``w2`` are
homotopic.  When it is not, no chain of rewrites of any length exists, and
the search is skipped (``certified=True`` on the verdict).
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

import numpy as np

from .errors import EndpointMismatch, InvalidWalk
from .faces import Face, ccw_darts, cw_darts, trace_faces
from .graph import Dart, Graph, Walk, iter_quasi_simple_walks
from .maps import RotationSystem, embedding_key, iter_maps


@dataclass(frozen=True)
class RewriteStep:
    """Replace ``ccw_F(a, b)`` by ``cw_F(a, b)`` (``to_cw``) or the reverse,
    where the replaced segment starts at dart index ``at`` of the walk."""

    face: int
    a: int
    b: int
    to_cw: bool
    at: int

    def inverse(self) -> "RewriteStep":
        return RewriteStep(self.face, self.a, self.b, not self.to_cw, self.at)


@dataclass(frozen=True)
class HomotopyVerdict:
    related: str  # "yes" | "no_within_bound"
    witness: Optional[tuple[RewriteStep, ...]] = None
    certified: bool = False
    explored: int = 0

    def __bool__(self) -> bool:
        return self.related == "yes"


def default_length_cap(g: Graph) -> int:
    return 2 * g.dart_count


class _Context:
    """Per-(graph, map) tables: segment index, dart endpoints, face vectors."""

    def __init__(self, g: Graph, m: RotationSystem):
        self.g = g
        self.faces: list[Face] = trace_faces(g, m)
        self.tails = [g.tail(d) for d in g.darts()]
        self.heads = [g.head(d) for d in g.darts()]
        self.segments: dict[tuple[int, ...], list] = {}
        self.insertions: dict[int, list] = {}
        for fi, face in enumerate(self.faces):
            n = face.degree
            for a in range(n):
                for b in range(n):
                    cw = tuple(d.index for d in cw_darts(face, a, b))
                    ccw = tuple(d.index for d in ccw_darts(face, a, b))
                    if a == b:
                        self.insertions.setdefault(face.nodes[a], []).append((cw, (fi, a, b, True)))
                    else:
                        self.segments.setdefault(ccw, []).append((cw, (fi, a, b, True)))
                    self.segments.setdefault(cw, []).append((ccw, (fi, a, b, False)))
        self.max_segment = max((len(k) for k in self.segments), default=0)
        self.boundary_matrix = np.zeros((g.edge_count, len(self.faces)))
        for fi, face in enumerate(self.faces):
            for d in face.boundary:
                self.boundary_matrix[d.edge, fi] += 1 if d.sense == 0 else -1
        self.boundary_rank = np.linalg.matrix_rank(self.boundary_matrix) if self.faces and g.edge_count else 0

    def nodes_along(self, start: int, w: tuple[int, ...]) -> list[int]:
        return [start] + [self.heads[i] for i in w]

    def rewrites(self, start: int, w: tuple[int, ...], cap: int) -> Iterator[tuple[tuple[int, ...], RewriteStep]]:
        nodes = self.nodes_along(start, w)
        L = len(w)
        for i in range(L + 1):
            for ins, (fi, a, b, to_cw) in self.insertions.get(nodes[i], ()):
                if L + len(ins) <= cap:
                    yield w[:i] + ins + w[i:], RewriteStep(fi, a, b, to_cw, i)
            for j in range(i + 1, min(L, i + self.max_segment) + 1):
                for rep, (fi, a, b, to_cw) in self.segments.get(w[i:j], ()):
                    if L - (j - i) + len(rep) <= cap:
                        yield w[:i] + rep + w[j:], RewriteStep(fi, a, b, to_cw, i)

    def edge_vector(self, w: tuple[int, ...]) -> np.ndarray:
        v = np.zeros(self.g.edge_count)
        for i in w:
            v[i >> 1] += -1 if i & 1 else 1
        return v

    def differ_by_boundaries(self, w1: tuple[int, ...], w2: tuple[int, ...]) -> bool:
        z = self.edge_vector(w1) - self.edge_vector(w2)
        if not z.any():
            return True
        if not self.faces:
            return False
        stacked = np.column_stack([self.boundary_matrix, z])
        return np.linalg.matrix_rank(stacked) == self.boundary_rank


@functools.lru_cache(maxsize=128)
def _context(g: Graph, m: RotationSystem) -> _Context:
    return _Context(g, m)


def _ids(w: Walk) -> tuple[int, ...]:
    return tuple(d.index for d in w.darts)


def _walk(ctx: _Context, start: int, ids: tuple[int, ...]) -> Walk:
    end = ctx.heads[ids[-1]] if ids else start
    return Walk(start, tuple(Dart.from_index(i) for i in ids), end)


def hcollapse_rewrites(g: Graph, m: RotationSystem, w: Walk, length_cap: Optional[int] = None) -> list[Walk]:
    """Every walk one hcollapse move away from ``w`` (both directions),
    without duplicates, in generation order."""
    ctx = _context(g, m)
    cap = length_cap if length_cap is not None else 10**9
    seen: dict[tuple[int, ...], None] = {}
    for new, _ in ctx.rewrites(w.start, _ids(w), cap):
        seen.setdefault(new, None)
    return [_walk(ctx, w.start, ids) for ids in seen]


def apply_step(g: Graph, m: RotationSystem, w: Walk, step: RewriteStep) -> Walk:
    ctx = _context(g, m)
    face = ctx.faces[step.face]
    cw = tuple(cw_darts(face, step.a, step.b))
    ccw = tuple(ccw_darts(face, step.a, step.b))
    old, new = (ccw, cw) if step.to_cw else (cw, ccw)
    if step.a == step.b and step.to_cw and face.nodes[step.a] != ([w.start] + [g.head(d) for d in w.darts])[step.at]:
        raise InvalidWalk(f"rewrite {step} inserts at a different node")
    if w.darts[step.at:step.at + len(old)] != old:
        raise InvalidWalk(f"rewrite {step} does not match the walk")
    return Walk(w.start, w.darts[:step.at] + new + w.darts[step.at + len(old):], w.end)


def replay(g: Graph, m: RotationSystem, w: Walk, witness) -> Walk:
    for step in witness:
        w = apply_step(g, m, w, step)
    return w


def homotopic(
    g: Graph,
    m: RotationSystem,
    w1: Walk,
    w2: Walk,
    length_cap: Optional[int] = None,
    prefilter: bool = True,
) -> HomotopyVerdict:
    """Search for a chain of hcollapse rewrites from ``w1`` to ``w2``.

    Bidirectional breadth-first search over walks of length at most
    ``length_cap`` (default: twice the number of darts).  A ``yes`` verdict
    carries a replayable witness.
    """
    if (w1.start, w1.end) != (w2.start, w2.end):
        raise EndpointMismatch(f"walks join {w1.start}->{w1.end} and {w2.start}->{w2.end}")
    cap = default_length_cap(g) if length_cap is None else length_cap
    if cap < max(len(w1), len(w2)):
        raise ValueError(f"length cap {cap} is shorter than one of the walks")
    a, b = _ids(w1), _ids(w2)
    if a == b:
        return HomotopyVerdict("yes", (), explored=1)
    ctx = _context(g, m)
    if prefilter and not ctx.differ_by_boundaries(a, b):
        return HomotopyVerdict("no_within_bound", None, certified=True)
    return _bidirectional(ctx, w1.start, a, b, cap)


def _bidirectional(ctx: _Context, start: int, a, b, cap: int) -> HomotopyVerdict:
    # parents map walk -> (previous walk, step taking previous to walk)
    fwd: dict = {a: None}
    bwd: dict = {b: None}
    fwd_frontier, bwd_frontier = [a], [b]
    while fwd_frontier and bwd_frontier:
        grow_fwd = len(fwd_frontier) <= len(bwd_frontier)
        frontier = fwd_frontier if grow_fwd else bwd_frontier
        mine, other = (fwd, bwd) if grow_fwd else (bwd, fwd)
        nxt = []
        for w in frontier:
            for new, step in ctx.rewrites(start, w, cap):
                if new in mine:
                    continue
                mine[new] = (w, step)
                if new in other:
                    witness = _join(fwd, bwd, new)
                    return HomotopyVerdict("yes", witness, explored=len(fwd) + len(bwd))
                nxt.append(new)
        if grow_fwd:
            fwd_frontier = nxt
        else:
            bwd_frontier = nxt
    return HomotopyVerdict("no_within_bound", None, explored=len(fwd) + len(bwd))


def _join(fwd: dict, bwd: dict, meet) -> tuple[RewriteStep, ...]:
    head = []
    w = meet
    while fwd[w] is not None:
        w, step = fwd[w]
        head.append(step)
    head.reverse()
    tail = []
    w = meet
    while bwd[w] is not None:
        prev, step = bwd[w]
        # step took prev to w on the backward side; undo it going forward
        tail.append(RewriteStep(step.face, step.a, step.b, not step.to_cw, step.at))
        w = prev
    return tuple(head + tail)


@dataclass(frozen=True)
class SphericityReport:
    spherical: bool
    pairs_checked: int
    failure: Optional[tuple[Walk, Walk, HomotopyVerdict]] = None


def sphericity_report(
    g: Graph, m: RotationSystem, length_cap: Optional[int] = None, prefilter: bool = True
) -> SphericityReport:
    """Compare every quasi-simple walk from ``x`` to ``y`` against the first
    one, for every node pair with ``x <= y``.

    Pairs with ``x > y`` are the reversals of these: reversing a walk turns
    ``cw_F(a, b)`` into ``ccw_F(b, a)``, so rewrite chains reverse too.
    """
    cap = default_length_cap(g) if length_cap is None else length_cap
    ctx = _context(g, m)
    checked = 0
    for x in g.nodes():
        for y in range(x, g.node_count):
            walks = list(iter_quasi_simple_walks(g, x, y))
            if len(walks) < 2:
                continue
            base = walks[0]
            if prefilter:
                for w in walks[1:]:
                    checked += 1
                    if not ctx.differ_by_boundaries(_ids(base), _ids(w)):
                        return SphericityReport(False, checked, (base, w, HomotopyVerdict("no_within_bound", None, True)))
            for w in walks[1:]:
                verdict = homotopic(g, m, base, w, max(cap, len(base), len(w)), prefilter=False)
                checked += 1
                if not verdict:
                    return SphericityReport(False, checked, (base, w, verdict))
    return SphericityReport(True, checked)


def is_spherical_bruteforce(
    g: Graph, m: RotationSystem, length_cap: Optional[int] = None, prefilter: bool = True
) -> bool:
    return sphericity_report(g, m, length_cap, prefilter).spherical


@dataclass
class CensusResult:
    graphs: int = 0
    maps: int = 0
    spherical: int = 0
    oracle_runs: int = 0
    disagreements: list = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return not self.disagreements


def oracle_census(graphs: Iterable[Graph], length_cap: Optional[int] = None) -> CensusResult:
    """Compare the oracle with the Euler criterion on every map of every graph.

    The oracle's verdict depends only on the embedded graph up to relabelling
    darts and flipping edges, so it runs once per :func:`embedding_key`.
    Euler is computed for every map.
    """
    from .faces import euler

    res = CensusResult()
    verdicts: dict = {}
    for g in graphs:
        res.graphs += 1
        for m in iter_maps(g):
            res.maps += 1
            by_euler = euler(g, m).spherical_by_euler
            res.spherical += by_euler
            key = embedding_key(g, m)
            if key not in verdicts:
                verdicts[key] = is_spherical_bruteforce(g, m, length_cap)
                res.oracle_runs += 1
            if verdicts[key] != by_euler:
                res.disagreements.append((g, m, by_euler, verdicts[key]))
    return res
