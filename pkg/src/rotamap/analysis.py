"""Isomorphism search, automorphism groups and colouring counts.

Backtracking over node bijections pruned by (out-degree, in-degree, loops)
profiles and pairwise edge multiplicities; parallel edges are then matched
in every possible way.  Meant for graphs of a handful of nodes.
"""
from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph


@dataclass(frozen=True)
class Isomorphism:
    node_map: tuple[int, ...]
    edge_map: tuple[int, ...]

    def compose(self, other: "Isomorphism") -> "Isomorphism":
        """``self . other``: apply ``other`` first."""
        return Isomorphism(
            tuple(self.node_map[x] for x in other.node_map),
            tuple(self.edge_map[e] for e in other.edge_map),
        )

    def inverse(self) -> "Isomorphism":
        nodes = [0] * len(self.node_map)
        for x, y in enumerate(self.node_map):
            nodes[y] = x
        edges = [0] * len(self.edge_map)
        for e, f in enumerate(self.edge_map):
            edges[f] = e
        return Isomorphism(tuple(nodes), tuple(edges))

    def is_valid(self, g: Graph, h: Graph) -> bool:
        if sorted(self.node_map) != list(range(h.node_count)):
            return False
        if sorted(self.edge_map) != list(range(h.edge_count)):
            return False
        return all(
            h.edges[self.edge_map[e]] == (self.node_map[s], self.node_map[t])
            for e, (s, t) in enumerate(g.edges)
        )


def _profile(g: Graph, x: int) -> tuple[int, int, int]:
    loops = sum(1 for s, t in g.edges if s == x == t)
    return (g.out_degree(x), g.in_degree(x), loops)


def iter_node_bijections(g: Graph, h: Graph) -> Iterator[tuple[int, ...]]:
    """Node bijections ``g -> h`` preserving every pairwise edge multiplicity."""
    n = g.node_count
    if n != h.node_count or g.edge_count != h.edge_count:
        return
    pg = [_profile(g, x) for x in range(n)]
    ph = [_profile(h, y) for y in range(n)]
    if sorted(pg) != sorted(ph):
        return
    mg, mh = g.multiplicity(), h.multiplicity()
    # place high-degree nodes first; they prune hardest
    order = sorted(range(n), key=lambda x: (-sum(pg[x]), x))
    assign: dict[int, int] = {}
    used = [False] * n

    def extend(i):
        if i == n:
            yield tuple(assign[x] for x in range(n))
            return
        x = order[i]
        for y in range(n):
            if used[y] or pg[x] != ph[y]:
                continue
            if mg[(x, x)] != mh[(y, y)]:
                continue
            if any(
                mg[(x, z)] != mh[(y, assign[z])] or mg[(z, x)] != mh[(assign[z], y)]
                for z in order[:i]
            ):
                continue
            assign[x] = y
            used[y] = True
            yield from extend(i + 1)
            used[y] = False
            del assign[x]

    yield from extend(0)


def iter_isomorphisms(g: Graph, h: Graph) -> Iterator[Isomorphism]:
    h_groups: dict[tuple[int, int], list[int]] = defaultdict(list)
    for f, pair in enumerate(h.edges):
        h_groups[pair].append(f)
    g_groups: dict[tuple[int, int], list[int]] = defaultdict(list)
    for e, pair in enumerate(g.edges):
        g_groups[pair].append(e)
    for nodes in iter_node_bijections(g, h):
        pairs = list(g_groups)
        choices = []
        for pair in pairs:
            target = h_groups[(nodes[pair[0]], nodes[pair[1]])]
            choices.append(list(itertools.permutations(target)))
        for combo in itertools.product(*choices):
            edges = [0] * g.edge_count
            for pair, image in zip(pairs, combo):
                for e, f in zip(g_groups[pair], image):
                    edges[e] = f
            yield Isomorphism(nodes, tuple(edges))


def isomorphisms(g: Graph, h: Graph) -> list[Isomorphism]:
    return list(iter_isomorphisms(g, h))


def automorphisms(g: Graph) -> list[Isomorphism]:
    return isomorphisms(g, g)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return next(iter_node_bijections(g, h), None) is not None


def canonical_form(g: Graph) -> tuple:
    """Lexicographically least sorted edge list over all node relabellings."""
    best = None
    for perm in itertools.permutations(range(g.node_count)):
        key = tuple(sorted((perm[s], perm[t]) for s, t in g.edges))
        if best is None or key < best:
            best = key
    return (g.node_count, best or ())


# -- colourings -------------------------------------------------------------


def iter_colourings(g: Graph, n: int) -> Iterator[tuple[int, ...]]:
    """Homomorphisms ``g -> K_n`` as node colourings.

    K_n has exactly one edge per ordered pair of distinct colours, so the
    edge part of the homomorphism is forced and a colouring is valid iff no
    edge joins two nodes of the same colour.
    """
    if any(s == t for s, t in g.edges):
        return
    adj: list[set[int]] = [set() for _ in g.nodes()]
    for s, t in g.edges:
        adj[s].add(t)
        adj[t].add(s)
    colour = [-1] * g.node_count

    def extend(x):
        if x == g.node_count:
            yield tuple(colour)
            return
        for c in range(n):
            if all(colour[y] != c for y in adj[x] if y < x):
                colour[x] = c
                yield from extend(x + 1)
        colour[x] = -1

    yield from extend(0)


def colouring_classes(g: Graph, n: int) -> list[list[tuple[int, ...]]]:
    """Partition the n-colourings into orbits under permutations of the colours."""
    classes: dict[tuple, list] = {}
    perms = list(itertools.permutations(range(n)))
    assigned: set = set()
    for c in iter_colourings(g, n):
        if c in assigned:
            continue
        orbit = sorted({tuple(p[k] for k in c) for p in perms})
        assigned.update(orbit)
        classes[orbit[0]] = orbit
    return [classes[k] for k in sorted(classes)]


def colouring_count(g: Graph, n: int) -> tuple[int, int]:
    """(total colourings, essentially different colourings)."""
    classes = colouring_classes(g, n)
    return sum(len(c) for c in classes), len(classes)


def degree_multiset(g: Graph) -> Counter:
    return Counter(_profile(g, x) for x in g.nodes())


def iter_small_graphs(max_nodes: int, max_edges: int, connected: bool = True) -> Iterator[Graph]:
    """Every directed multigraph with 1..max_nodes nodes and at most
    ``max_edges`` edges, one per isomorphism class, edges in canonical order."""
    from .graph import is_connected

    for n in range(1, max_nodes + 1):
        pairs = [(s, t) for s in range(n) for t in range(n)]
        seen: set = set()
        for e in range(max_edges + 1):
            for combo in itertools.combinations_with_replacement(pairs, e):
                g = Graph(n, combo)
                if connected and not is_connected(g):
                    continue
                key = canonical_form(g)
                if key in seen:
                    continue
                seen.add(key)
                yield Graph(n, key[1])
