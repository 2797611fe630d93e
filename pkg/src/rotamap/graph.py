"""Directed multigraphs, darts, stars and walks.

A graph is a node count plus an edge list; the position of an edge in the
list is its identity.  Every edge ``e = (s, t)`` contributes two darts to the
symmetrisation ``U(G)``: ``Dart(e, OUT)`` running ``s -> t`` and
``Dart(e, IN)`` running ``t -> s``.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .errors import IndexOutOfRange, InvalidWalk, UnsupportedFamily


class Sense(enum.IntEnum):
    OUT = 0
    IN = 1


class Dart(NamedTuple):
    edge: int
    sense: Sense

    def reverse(self) -> "Dart":
        return Dart(self.edge, Sense(1 - self.sense))

    @property
    def index(self) -> int:
        """Dense integer id, ``2 * edge + sense``."""
        return 2 * self.edge + int(self.sense)

    @classmethod
    def from_index(cls, i: int) -> "Dart":
        return cls(i >> 1, Sense(i & 1))

    def __repr__(self) -> str:
        return f"Dart({self.edge}, {self.sense.name})"


def out(e: int) -> Dart:
    return Dart(e, Sense.OUT)


def inn(e: int) -> Dart:
    return Dart(e, Sense.IN)


@dataclass(frozen=True)
class Graph:
    node_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.node_count < 0:
            raise IndexOutOfRange(f"negative node count {self.node_count}")
        edges = tuple((int(s), int(t)) for s, t in self.edges)
        for i, (s, t) in enumerate(edges):
            if not (0 <= s < self.node_count and 0 <= t < self.node_count):
                raise IndexOutOfRange(f"edge {i} = ({s}, {t}) has an endpoint outside [0, {self.node_count})")
        object.__setattr__(self, "edges", edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def dart_count(self) -> int:
        return 2 * len(self.edges)

    def nodes(self) -> range:
        return range(self.node_count)

    def darts(self) -> list[Dart]:
        """All darts in canonical order (ascending edge, OUT before IN)."""
        return [Dart(e, s) for e in range(len(self.edges)) for s in (Sense.OUT, Sense.IN)]

    def tail(self, d: Dart) -> int:
        s, t = self.edges[d.edge]
        return s if d.sense == Sense.OUT else t

    def head(self, d: Dart) -> int:
        s, t = self.edges[d.edge]
        return t if d.sense == Sense.OUT else s

    def check_node(self, x: int) -> None:
        if not 0 <= x < self.node_count:
            raise IndexOutOfRange(f"node {x} not in [0, {self.node_count})")

    def degree(self, x: int) -> int:
        self.check_node(x)
        return sum((s == x) + (t == x) for s, t in self.edges)

    def out_degree(self, x: int) -> int:
        return sum(s == x for s, _ in self.edges)

    def in_degree(self, x: int) -> int:
        return sum(t == x for _, t in self.edges)

    def multiplicity(self) -> Counter:
        """Number of parallel edges for each ordered node pair."""
        return Counter(self.edges)

    def neighbours(self, x: int) -> set[int]:
        return {self.head(d) for d in star(self, x)}


def build_graph(node_count: int, edge_list: Sequence[Sequence[int]] = ()) -> Graph:
    return Graph(int(node_count), tuple(tuple(e) for e in edge_list))


def dart_between(g: Graph, x: int, y: int) -> Dart:
    """The only dart running ``x -> y``; raises if there is none or several."""
    found = [d for d in g.darts() if g.tail(d) == x and g.head(d) == y]
    if len(found) != 1:
        raise ValueError(f"{len(found)} darts run {x} -> {y}")
    return found[0]


def star(g: Graph, x: int) -> list[Dart]:
    """Darts with tail ``x``, ascending edge id, OUT before IN."""
    g.check_node(x)
    result = []
    for e, (s, t) in enumerate(g.edges):
        if s == x:
            result.append(Dart(e, Sense.OUT))
        if t == x:
            result.append(Dart(e, Sense.IN))
    return result


def stars(g: Graph) -> list[list[Dart]]:
    result: list[list[Dart]] = [[] for _ in range(g.node_count)]
    for e, (s, t) in enumerate(g.edges):
        result[s].append(Dart(e, Sense.OUT))
        result[t].append(Dart(e, Sense.IN))
    return result


def symmetrise(g: Graph) -> Graph:
    """``U(G)`` as a graph: the original edges followed by one reversed copy of each."""
    return Graph(g.node_count, g.edges + tuple((t, s) for s, t in g.edges))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    k = g.node_count
    return Graph(k + h.node_count, g.edges + tuple((s + k, t + k) for s, t in h.edges))


def remove_node(g: Graph, x: int) -> Graph:
    """``G - x``: drop ``x`` and its incident edges, renumbering the remaining nodes."""
    g.check_node(x)
    relabel = lambda y: y - (y > x)  # noqa: E731
    return Graph(
        g.node_count - 1,
        tuple((relabel(s), relabel(t)) for s, t in g.edges if s != x and t != x),
    )


FAMILIES = ("path", "cycle", "bouquet", "complete", "k33")


def make_family(kind: str, n: int = 0) -> Graph:
    """Named graph families.

    ``path``     P_n, edges i -> i+1.
    ``cycle``    C_n, edges i -> i+1 mod n; C_0 is the one-point graph.
    ``bouquet``  B_n, one node with n loops.
    ``complete`` K_n, one edge per ordered pair of distinct nodes.
    ``k33``      K_{3,3} with a single edge i -> j for i < 3 <= j (``n`` ignored).
    """
    if n < 0:
        raise IndexOutOfRange(f"negative size {n}")
    if kind == "path":
        return Graph(n, tuple((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        if n == 0:
            return Graph(1)
        return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))
    if kind == "bouquet":
        return Graph(1, ((0, 0),) * n)
    if kind == "complete":
        return Graph(n, tuple((u, v) for u in range(n) for v in range(n) if u != v))
    if kind == "k33":
        return Graph(6, tuple((i, j) for i in range(3) for j in range(3, 6)))
    raise UnsupportedFamily(f"unknown graph family {kind!r}; expected one of {FAMILIES}")


def u_cycle(n: int) -> Graph:
    return symmetrise(make_family("cycle", n))


def components(g: Graph) -> list[list[int]]:
    """Connected components of ``U(g)``, each sorted, ordered by smallest node."""
    parent = list(range(g.node_count))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for s, t in g.edges:
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[max(rs, rt)] = min(rs, rt)
    groups: dict[int, list[int]] = {}
    for x in g.nodes():
        groups.setdefault(find(x), []).append(x)
    return [groups[r] for r in sorted(groups)]


def is_connected(g: Graph) -> bool:
    # the empty graph is connected: there is no pair of nodes to join
    return len(components(g)) <= 1


def is_biconnected(g: Graph) -> bool:
    """True iff ``g - x`` is connected for every node ``x``."""
    return all(is_connected(remove_node(g, x)) for x in g.nodes())


@dataclass(frozen=True)
class Walk:
    """A walk in ``U(G)``: a start node and a chain of darts.

    ``end`` is stored so a walk carries its endpoints without its graph.
    """

    start: int
    darts: tuple[Dart, ...] = ()
    end: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "darts", tuple(Dart(d[0], Sense(d[1])) for d in self.darts))
        if self.end is None:
            if self.darts:
                raise InvalidWalk("a non-trivial walk needs its end node; use make_walk")
            object.__setattr__(self, "end", self.start)

    def __len__(self) -> int:
        return len(self.darts)

    @property
    def is_trivial(self) -> bool:
        return not self.darts


def make_walk(g: Graph, start: int, darts: Sequence[Dart] = ()) -> Walk:
    """Validate the dart chain against ``g`` and build the walk."""
    g.check_node(start)
    darts = tuple(Dart(d[0], Sense(d[1])) for d in darts)
    at = start
    for i, d in enumerate(darts):
        if not 0 <= d.edge < g.edge_count:
            raise IndexOutOfRange(f"dart {d} refers to a missing edge")
        if g.tail(d) != at:
            raise InvalidWalk(f"dart {i} ({d}) starts at {g.tail(d)}, expected {at}")
        at = g.head(d)
    return Walk(start, darts, at)


def walk_nodes(g: Graph, w: Walk) -> list[int]:
    return [w.start] + [g.head(d) for d in w.darts]


def concat(w1: Walk, w2: Walk) -> Walk:
    if w1.end != w2.start:
        raise InvalidWalk(f"cannot compose a walk ending at {w1.end} with one starting at {w2.start}")
    return Walk(w1.start, w1.darts + w2.darts, w2.end)


def reverse_walk(w: Walk) -> Walk:
    return Walk(w.end, tuple(d.reverse() for d in reversed(w.darts)), w.start)


def iter_quasi_simple_walks(g: Graph, x: int, y: int) -> Iterator[Walk]:
    """Walks ``x -> y`` in ``U(g)`` repeating no node, except that a closed
    walk (``x == y``) returns to ``x`` once, as its final step.

    Depth-first over stars in canonical order; the trivial walk comes first
    when ``x == y``.
    """
    g.check_node(x)
    g.check_node(y)
    adj = stars(g)
    heads = [g.head(d) for d in g.darts()]
    visited = [False] * g.node_count
    path: list[Dart] = []

    if x == y:
        yield Walk(x)

    def dfs(at):
        for d in adj[at]:
            z = heads[d.index]
            if z == y:
                # reaching y ends the walk: continuing would repeat y
                yield Walk(x, tuple(path) + (d,), y)
                continue
            if visited[z]:
                continue
            visited[z] = True
            path.append(d)
            yield from dfs(z)
            path.pop()
            visited[z] = False

    visited[x] = True
    yield from dfs(x)


def enumerate_quasi_simple_walks(g: Graph, x: int, y: int) -> list[Walk]:
    return list(iter_quasi_simple_walks(g, x, y))
