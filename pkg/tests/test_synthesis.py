import random

import pytest
from hypothesis import given, settings, strategies as st

from rotamap.errors import IndexOutOfRange, InvariantViolation, PositionNotOnFace, ZeroLength
from rotamap.faces import euler
from rotamap.graph import is_biconnected, is_connected, make_family, u_cycle
from rotamap.synthesis import (
    AdditionStep,
    PlanarState,
    base_state,
    check_state,
    expected_deltas,
    face_division,
    path_addition,
    random_script,
    run_synthesis,
    spike_addition,
)

K4_SCRIPT = [AdditionStep("path", 0, 0, 1, 2, True), AdditionStep("path", 2, 3, 1, 1, True)]


def test_path_addition_counts():
    g = path_addition(make_family("cycle", 3), 0, 1, 2, True)
    assert (g.node_count, g.edge_count) == (4, 5)
    assert g.edges[3:] == ((0, 3), (3, 1))
    h = path_addition(make_family("cycle", 3), 0, 1, 2, False)
    assert (h.node_count, h.edge_count) == (4, 7)
    assert h.edges[3:] == ((0, 3), (3, 0), (3, 1), (1, 3))
    s = spike_addition(make_family("cycle", 3), 2, 2, False)
    assert (s.node_count, s.edge_count) == (5, 7)
    assert s.edges[3:] == ((2, 3), (3, 2), (3, 4), (4, 3))


def test_addition_errors():
    c3 = make_family("cycle", 3)
    with pytest.raises(IndexOutOfRange):
        path_addition(c3, 0, 3, 1)
    with pytest.raises(ZeroLength):
        path_addition(c3, 0, 1, 0)
    with pytest.raises(ZeroLength):
        AdditionStep("path", 0, 0, 1, 0)
    state = base_state("cycle", 3)
    with pytest.raises(PositionNotOnFace):
        face_division(state, AdditionStep("path", 0, 0, 3, 1))
    with pytest.raises(PositionNotOnFace):
        face_division(state, AdditionStep("spike", 5, 0, None, 1))


def test_non_simple_path_keeps_u_cycle_biconnected():
    g = path_addition(u_cycle(3), 0, 1, 1, False)
    assert is_biconnected(g)


def test_simple_closed_path_breaks_biconnectivity():
    # a path leaving and re-entering one node hangs its two inner nodes on it
    state = base_state("u_cycle", 3)
    f = next(i for i, face in enumerate(state.faces) if face.degree == 3)
    after = face_division(state, AdditionStep("path", f, 0, 0, 3, True))
    assert is_connected(after.graph) and not is_biconnected(after.graph)


def test_base_states():
    for n in range(1, 7):
        s = base_state("cycle", n)
        assert s.counts == (n, n, 2) and s.chi == 2
        u = base_state("u_cycle", n)
        assert u.counts == (n, 2 * n, n + 2) and u.chi == 2
    (only,) = run_synthesis(("cycle", 3), [])
    assert only.counts == (3, 3, 2)


def test_first_division_of_c3():
    s = face_division(base_state("cycle", 3), K4_SCRIPT[0])
    assert s.counts == (4, 5, 3) and s.chi == 2


def test_k4_synthesis():
    states = run_synthesis(("cycle", 3), K4_SCRIPT)
    final = states[-1]
    assert final.counts == (4, 6, 4)
    assert euler(final.graph, final.map).chi == 2
    assert sorted(f.degree for f in final.faces) == [3, 3, 3, 3]


def test_spike_into_inner_face():
    state = base_state("cycle", 3)
    inner = 1 - state.outer
    after = face_division(state, AdditionStep("spike", inner, 0, None, 1, True))
    assert after.counts == (4, 4, 2)
    assert sorted(f.degree for f in after.faces) == [3, 5]


def test_outer_face_tracking():
    state = base_state("cycle", 4)
    outer = state.faces[state.outer]
    after = face_division(state, AdditionStep("path", state.outer, 0, 2, 1, True))
    cw_start = outer.boundary[0]
    assert cw_start in after.faces[after.outer].boundary
    inner = face_division(state, AdditionStep("path", 1 - state.outer, 0, 2, 1, True))
    assert outer.boundary[0] in inner.faces[inner.outer].boundary


def test_spike_on_repeated_node_positions():
    # after a spike the face visits node 0 twice; both positions are usable
    state = base_state("cycle", 3)
    inner = 1 - state.outer
    s = face_division(state, AdditionStep("spike", inner, 0, None, 1, True))
    f = next(i for i, face in enumerate(s.faces) if face.degree == 5)
    positions = [p for p, x in enumerate(s.faces[f].nodes) if x == 0]
    assert len(positions) == 2
    for p in positions:
        t = face_division(s, AdditionStep("path", f, p, p, 1, True))
        assert t.chi == 2


def test_check_state_detects_tampering():
    s = base_state("cycle", 3)
    with pytest.raises(InvariantViolation):
        check_state(PlanarState(s.graph, s.map, s.faces, 7))
    with pytest.raises(InvariantViolation):
        check_state(PlanarState(s.graph, s.map, s.faces[::-1], 0))


@given(st.integers(0, 10_000), st.sampled_from(["cycle", "u_cycle"]), st.integers(1, 5))
@settings(max_examples=60, deadline=None)
def test_random_scripts_keep_invariants(seed, base, n):
    rng = random.Random(seed)
    script, states = random_script((base, n), rng, rng.randint(1, 5))
    for step, before, after in zip(script, states, states[1:]):
        dn, de, df = expected_deltas(step)
        assert after.counts == (before.counts[0] + dn, before.counts[1] + de, before.counts[2] + df)
        assert after.chi == 2 and is_connected(after.graph)
        assert 0 <= after.outer < len(after.faces)
        check_state(after)
        old = before.map.rotations
        touched = {before.faces[step.face].nodes[step.u]}
        if step.v is not None:
            touched.add(before.faces[step.face].nodes[step.v])
        assert all(after.map.rotations[x] == r for x, r in enumerate(old) if x not in touched)


@given(st.integers(0, 10_000), st.sampled_from([3, 4, 5]))
@settings(max_examples=30, deadline=None)
def test_whitney_syntheses_stay_biconnected(seed, n):
    rng = random.Random(seed)
    _, states = random_script(("u_cycle", n), rng, 4, kinds=("path",), simple=False, distinct_nodes=True)
    for s in states:
        assert is_biconnected(s.graph)
        assert all(s.graph.degree(x) >= 2 for x in s.graph.nodes())
