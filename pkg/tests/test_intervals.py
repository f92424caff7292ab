from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _oracles import (
    all_labelled_graphs,
    atlas,
    endpoint_order_interval,
    endpoint_order_proper_interval,
    graphs,
)
from boxicity.errors import CapacityError, InputError
from boxicity.graph import add_edges, complete, cycle, from_edge_list, path, star
from boxicity.intervals import (
    IntervalAssignment,
    Representation,
    find_claw,
    intersection_graph,
    is_interval,
    is_supergraph,
    is_unit_interval,
    maximal_cliques,
    meet,
    representation_from_json,
    verify,
)


def ia(*pairs, scale=2):
    return IntervalAssignment(tuple(pairs), scale)


def test_intersection_graph_examples():
    assert intersection_graph(ia((0, 2), (2, 4), (5, 6))).edges == {(0, 1)}
    assert intersection_graph(ia(*[(0, 2)] * 5)) == complete(5)
    # cover {b} of the path a-b-c, first bit dim: f(b)=[0.5,1.5], f(a)=[0,1], f(c)=[1.5,2.5]
    assert intersection_graph(ia((0, 2), (1, 3), (3, 5))).edges == {(0, 1), (1, 2)}


def test_assignment_validation():
    with pytest.raises(InputError):
        ia((3, 1))
    with pytest.raises(InputError):
        IntervalAssignment.from_mapping({0: (0, 1)}, 2)
    with pytest.raises(InputError):
        intersection_graph(ia((0, 1)), n=2)
    with pytest.raises(InputError):
        ia((0, 1), scale=0)


def test_meet_examples():
    c4, k4 = cycle(4), complete(4)
    assert meet([c4, k4]) == c4
    assert meet([], n=3) == complete(3)
    assert meet([add_edges(c4, [(0, 2)]), add_edges(c4, [(1, 3)])]) == c4
    with pytest.raises(InputError):
        meet([c4, complete(3)])
    with pytest.raises(InputError):
        meet([])


@given(st.lists(graphs(max_n=6, min_n=6), min_size=1, max_size=4), st.randoms())
def test_meet_algebra(gs, rnd):
    shuffled = list(gs)
    rnd.shuffle(shuffled)
    assert meet(gs) == meet(shuffled)
    assert meet(gs + gs) == meet(gs)
    assert meet([meet(gs[:1]), meet(gs[1:] or [complete(6)])]) == meet(gs)
    assert meet(gs + [meet([], n=6)]) == meet(gs)


def test_is_supergraph_examples():
    c4, k4 = cycle(4), complete(4)
    assert is_supergraph(k4, c4)
    assert not is_supergraph(c4, k4)
    assert is_supergraph(c4, c4)
    with pytest.raises(InputError):
        is_supergraph(c4, complete(3))


def test_recognition_examples():
    assert not is_interval(cycle(4))
    assert is_interval(star(4))
    assert not is_interval(cycle(6))
    assert is_unit_interval(path(4))
    assert not is_unit_interval(star(4))
    assert not is_unit_interval(cycle(4))
    assert find_claw(star(4)) == (0, 1, 2, 3)


def test_recognition_cap():
    with pytest.raises(CapacityError):
        is_interval(path(17))
    assert is_interval(path(17), cap=17)


def test_maximal_cliques_of_small_graphs():
    assert maximal_cliques(cycle(4)) == sorted([0b0011, 0b0110, 0b1100, 0b1001])
    assert maximal_cliques(complete(4)) == [0b1111]
    assert maximal_cliques(from_edge_list(3, [])) == [1, 2, 4]


def _check_witnesses(g):
    r = is_interval(g)
    if r:
        assert intersection_graph(r.witness) == g
        assert r.witness.scale == 2
    u = is_unit_interval(g)
    if u:
        assert r
        assert intersection_graph(u.witness) == g
        assert u.witness.is_unit()
    return bool(r), bool(u)


@pytest.mark.parametrize("n", range(1, 6))
def test_recognition_matches_endpoint_search_all_labelled(n):
    for g in all_labelled_graphs(n):
        member, unit = _check_witnesses(g)
        assert member == endpoint_order_interval(g), g
        assert unit == endpoint_order_proper_interval(g), g


def test_recognition_matches_endpoint_search_all_classes_up_to_7():
    counts = [0, 0]
    for g in atlas(7):
        member, unit = _check_witnesses(g)
        assert member == endpoint_order_interval(g), g
        assert unit == endpoint_order_proper_interval(g), g
        counts[0] += member
        counts[1] += unit
    # unlabelled interval / unit interval graphs on 1..7 vertices
    assert counts == [1 + 2 + 4 + 10 + 27 + 92 + 369, 1 + 2 + 4 + 9 + 21 + 55 + 151]


@given(graphs(max_n=10))
def test_recognition_witness_soundness(g):
    _check_witnesses(g)


def _rep(kind, g, *dims):
    return Representation(kind, tuple(dims), g)


def test_verify_clean_and_failing():
    c4 = cycle(4)
    # two interval supergraphs of C4: one adds chord 02, the other chord 13
    d1 = ia((2, 4), (0, 2), (0, 4), (4, 6))  # 0-1, 0-2, 0-3, 1-2, 2-3
    d2 = ia((0, 2), (2, 4), (4, 6), (0, 6))
    assert intersection_graph(d1) == add_edges(c4, [(0, 2)])
    assert intersection_graph(d2) == add_edges(c4, [(1, 3)])
    report = verify(_rep("box", c4, d1, d2))
    assert report.ok and report.breakers == {(0, 2): 1, (1, 3): 0}

    missing = verify(_rep("box", c4, d1, ia((0, 2), (4, 6), (4, 6), (0, 6))))
    assert not missing.ok
    assert [v.clause for v in missing.violations] == ["supergraph"]
    assert missing.violations[0].witness == (0, 1)

    chord = verify(_rep("box", c4, d1))
    assert [(v.clause, v.witness) for v in chord.violations] == [("meet", (0, 2))]


def test_verify_unit_length_and_recognition_clauses():
    s = star(5)
    long = ia((0, 3), (0, 2), (0, 2), (0, 2), (0, 2))
    report = verify(_rep("cub", s, long))
    clauses = {v.clause for v in report.violations}
    assert "unit_length" in clauses and "meet" in clauses
    assert verify(_rep("box", complete(3))).ok  # empty meet is complete


def test_verify_recognition_skipped_above_cap():
    g = path(18)
    d = ia(*[(2 * i, 2 * i + 2) for i in range(18)])
    report = verify(_rep("cub", g, d))
    assert report.ok and not report.recognition_checked


def test_json_round_trip_and_canonical_form():
    g = path(12)
    d = ia(*[(2 * i, 2 * i + 2) for i in range(12)])
    rep = _rep("cub", g, d)
    text = rep.to_json()
    doc = json.loads(text)
    assert list(doc) == ["kind", "scale", "n", "dims"]
    assert list(doc["dims"][0]) == [str(i) for i in range(12)]
    back = representation_from_json(text, g)
    assert back.dims == rep.dims and back.kind == "cub"
    with pytest.raises(InputError):
        representation_from_json(text, path(11))
    with pytest.raises(InputError):
        representation_from_json('{"kind":"box"}', g)


def test_json_common_scale_for_mixed_dims():
    g = path(3)
    rep = _rep("cub", g, ia((0, 1), (1, 2), (2, 3), scale=1), ia((0, 3), (3, 6), (6, 9), scale=3))
    doc = json.loads(rep.to_json())
    assert doc["scale"] == 3
    assert verify(representation_from_json(rep.to_json(), g)).ok
