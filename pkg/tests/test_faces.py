import random

import pytest
from hypothesis import given, settings

from rotamap.analysis import automorphisms
from rotamap.errors import InvalidMap, NotConnected, PositionOutOfRange
from rotamap.faces import (
    Face,
    boundary_walks,
    euler,
    face_lines,
    face_permutation,
    trace_faces,
    verify_face,
)
from rotamap.graph import Graph, build_graph, dart_between, inn, is_connected, make_family, make_walk, out
from rotamap.maps import build_map, enumerate_maps, transport_map

from conftest import graph_and_map
from test_maps import K33_ROTATIONS

K33_FACES = {
    "F1": "30 04 41 13",
    "F2": "14 42 25 51",
    "F3": "03 32 24 40 05 52 23 31 15 50",
}


def pairs_to_face(g, text):
    darts = tuple(dart_between(g, int(p[0]), int(p[1])) for p in text.split())
    return Face(darts, tuple(g.tail(d) for d in darts))


def rotations_equal(f1, f2):
    a, b = f1.boundary, f2.boundary
    return len(a) == len(b) and any(a[k:] + a[:k] == b for k in range(len(a)))


@pytest.fixture
def k33():
    g = make_family("k33")
    return g, build_map(g, K33_ROTATIONS)


def test_k33_faces_verbatim(k33):
    g, m = k33
    faces = trace_faces(g, m)
    assert sorted(f.degree for f in faces) == [4, 4, 10]
    for text in K33_FACES.values():
        want = pairs_to_face(g, text)
        assert sum(rotations_equal(want, f) for f in faces) == 1


def test_k33_face_lines(k33):
    g, m = k33
    assert face_lines(g, trace_faces(g, m)) == [
        "10 (03) (32) (24) (40) (05) (52) (23) (31) (15) (50)",
        "4 (30) (04) (41) (13)",
        "4 (14) (42) (25) (51)",
    ]


def test_k33_euler(k33):
    rep = euler(*k33)
    assert (rep.chi, rep.genus, rep.spherical_by_euler) == (0, 1, False)


def test_small_traces():
    c4 = make_family("cycle", 4)
    (m,) = enumerate_maps(c4)
    assert [f.degree for f in trace_faces(c4, m)] == [4, 4]
    b2 = make_family("bouquet", 2)
    mc = build_map(b2, [[out(0), out(1), inn(0), inn(1)]])
    assert [f.degree for f in trace_faces(b2, mc)] == [4]
    k1 = build_graph(1)
    (mk,) = enumerate_maps(k1)
    (f,) = trace_faces(k1, mk)
    assert f.degree == 0 and f.nodes == (0,)
    assert verify_face(k1, mk, f)
    assert trace_faces(build_graph(0), build_map(build_graph(0), [])) == []


def test_invalid_map_rejected():
    g = make_family("cycle", 3)
    (m,) = enumerate_maps(g)
    with pytest.raises(InvalidMap):
        trace_faces(make_family("cycle", 4), m)


def test_swapped_face_fails_verification(k33):
    g, m = k33
    f1 = pairs_to_face(g, K33_FACES["F1"])
    assert verify_face(g, m, f1)
    b = list(f1.boundary)
    b[1], b[2] = b[2], b[1]
    assert not verify_face(g, m, Face(tuple(b), tuple(g.tail(d) for d in b)))


def test_boundary_walks():
    c4 = make_family("cycle", 4)
    (m,) = enumerate_maps(c4)
    inner = trace_faces(c4, m)[0]
    cw, ccw = boundary_walks(inner, 0, 1)
    assert (len(cw), len(ccw)) == (1, 3)
    assert (cw.start, cw.end) == (ccw.start, ccw.end)
    full, trivial = boundary_walks(inner, 2, 2)
    assert len(full) == 4 and trivial.is_trivial
    digon = make_family("cycle", 2)
    (md,) = enumerate_maps(digon)
    a, b = boundary_walks(trace_faces(digon, md)[0], 0, 1)
    assert len(a) == len(b) == 1
    with pytest.raises(PositionOutOfRange):
        boundary_walks(inner, 0, 4)


def test_cycle_euler():
    for n in range(1, 9):
        g = make_family("cycle", n)
        (m,) = enumerate_maps(g)
        rep = euler(g, m)
        assert (rep.faces, rep.chi, rep.spherical_by_euler) == (2, 2, True)
    k1 = build_graph(1)
    assert euler(k1, enumerate_maps(k1)[0]).chi == 2
    with pytest.raises(NotConnected):
        euler(build_graph(2), build_map(build_graph(2), [[], []]))


@given(graph_and_map())
@settings(max_examples=200)
def test_face_invariants(gm):
    g, m = gm
    perm = face_permutation(g, m)
    assert sorted(perm.values()) == sorted(perm)
    faces = trace_faces(g, m)
    assert sum(f.degree for f in faces) == 2 * g.edge_count
    seen = [d for f in faces for d in f.boundary]
    assert len(seen) == len(set(seen))
    for f in faces:
        assert verify_face(g, m, f)
        if f.boundary:
            make_walk(g, f.nodes[0], f.boundary)
    if is_connected(g) and g.node_count:
        rep = euler(g, m)
        assert rep.chi % 2 == 0 and rep.chi <= 2
        assert rep.chi == 2 - 2 * rep.genus


@given(graph_and_map(max_nodes=5, max_edges=6, connected=True))
@settings(max_examples=50, deadline=None)
def test_chi_invariant_under_automorphisms(gm):
    g, m = gm
    chi = euler(g, m).chi
    rng = random.Random(g.edge_count)
    autos = automorphisms(g)
    for iso in rng.sample(autos, min(3, len(autos))):
        image = transport_map(m, iso.node_map, iso.edge_map)
        assert euler(g, image).chi == chi


def test_dart_labels_fall_back_for_parallel_edges():
    g = Graph(2, ((0, 1), (0, 1)))
    m = enumerate_maps(g)[0]
    assert face_lines(g, trace_faces(g, m))[0].split()[1].startswith("[out,")
