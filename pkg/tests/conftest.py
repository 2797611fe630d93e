import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from rotamap.cyclic import CyclicStruct
from rotamap.graph import Graph, stars
from rotamap.maps import RotationSystem

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixture_path():
    return lambda name: str(FIXTURES / name)


@st.composite
def graphs(draw, max_nodes=6, max_edges=8, min_nodes=1, connected=False):
    n = draw(st.integers(min_nodes, max_nodes))
    if connected and n > 1:
        # spanning tree first so the graph is connected
        edges = []
        for x in range(1, n):
            y = draw(st.integers(0, x - 1))
            edges.append((y, x) if draw(st.booleans()) else (x, y))
        extra = draw(st.integers(0, max(0, max_edges - len(edges))))
    else:
        edges = []
        extra = draw(st.integers(0, max_edges))
    node = st.integers(0, n - 1)
    edges += [(draw(node), draw(node)) for _ in range(extra)]
    order = draw(st.permutations(range(len(edges))))
    return Graph(n, tuple(edges[i] for i in order))


@st.composite
def graph_and_map(draw, **kwargs):
    g = draw(graphs(**kwargs))
    rots = []
    for s in stars(g):
        rots.append(CyclicStruct(tuple(draw(st.permutations(s)))))
    return g, RotationSystem(tuple(rots))


def random_graph(rng: random.Random, max_nodes=6, max_edges=8, connected=True) -> Graph:
    n = rng.randint(1, max_nodes)
    edges = []
    for x in range(1, n if connected else 1):
        y = rng.randrange(x)
        edges.append((y, x) if rng.random() < 0.5 else (x, y))
    while len(edges) < max_edges and rng.random() < 0.7:
        edges.append((rng.randrange(n), rng.randrange(n)))
    rng.shuffle(edges)
    return Graph(n, tuple(edges))


def random_map(rng: random.Random, g: Graph) -> RotationSystem:
    rots = []
    for s in stars(g):
        s = list(s)
        rng.shuffle(s)
        rots.append(CyclicStruct(tuple(s)))
    return RotationSystem(tuple(rots))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
