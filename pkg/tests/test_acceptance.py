"""Acceptance gate: ten criteria, exact equality throughout.

Each test prints one ``criterion N PASS|FAIL`` line as it runs, and the
same lines are repeated in the pytest terminal summary.
"""

from __future__ import annotations

import random
from functools import wraps

import pytest

from _oracles import atlas, endpoint_order_interval, endpoint_order_proper_interval, one_vertex_extensions
from conftest import ACCEPTANCE
from boxicity.box import (
    bipartite_bound,
    box_bound,
    build_bipartite_box_representation,
    build_box_representation,
)
from boxicity.combinatorics import approx_vertex_cover, min_vertex_cover
from boxicity.cub import bit_width, build_cub_representation, cub_bound
from boxicity.graph import Bipartition, bipartition_of, crown, cycle, random_bipartite, roberts, star
from boxicity.intervals import intersection_graph, is_interval, is_unit_interval, representation_from_json, verify
from boxicity.oracle import exact_boxicity, exact_cubicity, survey, survey_graph


def criterion(num: int, title: str):
    def wrap(fn):
        @wraps(fn)
        def run(*args, **kwargs):
            ok = False
            try:
                fn(*args, **kwargs)
                ok = True
            finally:
                ACCEPTANCE[num] = (title, ok)
                print(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title}")

        return run

    return wrap


def checked(rep):
    """Verify a representation, then verify it again after a JSON round trip."""
    assert verify(rep).ok
    back = representation_from_json(rep.to_json(), rep.source)
    assert [intersection_graph(d) for d in back.dims] == [intersection_graph(d) for d in rep.dims]
    assert verify(back).ok
    return rep


@criterion(1, "star tightness: cub-vc gives ceil(log2(n-1)) dims for n=3..9, exact cub(star 5) = 2")
def test_c01_star_tightness():
    for n in range(3, 10):
        g = star(n)
        rep = checked(build_cub_representation(g, min_vertex_cover(g)))
        assert len(rep) == bit_width(n - 1)
        assert all(d.is_unit() for d in rep.dims)
    assert exact_cubicity(star(5)).value == 2 == len(build_cub_representation(star(5), min_vertex_cover(star(5))))


@criterion(2, "cover cubicity bound: n<=7 all verify within t+ceil(log2(n-t))-1, exact cub <= construction for n<=6")
def test_c02_cub_bound():
    for g in atlas(7):
        c = min_vertex_cover(g)
        rep = checked(build_cub_representation(g, c))
        assert len(rep) <= cub_bound(g.n, len(c))
        if g.n <= 6:
            assert exact_cubicity(g).value <= len(rep)


@criterion(3, "C4 tightness: box-vc gives 2 dims, exact box(C4) = 2")
def test_c03_c4():
    g = cycle(4)
    assert len(checked(build_box_representation(g, min_vertex_cover(g)))) == 2
    assert exact_boxicity(g).value == 2


@criterion(4, "Roberts graphs n=4,6,8: cover n-2, box-vc <= n/2 dims, exact box = n/2")
def test_c04_roberts():
    for n in (4, 6, 8):
        g = roberts(n)
        c = min_vertex_cover(g)
        assert len(c) == n - 2
        assert len(checked(build_box_representation(g, c))) <= n // 2
        assert exact_boxicity(g).value == n // 2


@criterion(5, "cover boxicity bound: n<=7 all verify within floor(t/2)+1, exact box <= construction")
def test_c05_box_bound():
    for g in atlas(7):
        c = min_vertex_cover(g)
        rep = checked(build_box_representation(g, c))
        assert len(rep) <= box_bound(len(c))
        assert exact_boxicity(g).value <= len(rep)


@criterion(6, "bipartite bound: 200 seeded random (sides <= 6) plus all bipartite n<=7 verify within the bound")
def test_c06_bipartite():
    rng = random.Random(20240601)
    cases = []
    for seed in range(200):
        n1, n2 = rng.randint(1, 6), rng.randint(1, 6)
        g = random_bipartite(n1, n2, rng.choice((0.25, 0.5, 0.75, 1.0)), seed)
        cases.append((g, Bipartition(frozenset(range(n1)), frozenset(range(n1, n1 + n2)))))
    for g in atlas(7):
        bip = bipartition_of(g)
        if bip:
            cases.append((g, bip))
    for g, bip in cases:
        rep = checked(build_bipartite_box_representation(g, bip))
        assert len(rep) <= bipartite_bound(len(bip.side1), len(bip.side2))


@criterion(7, "crown tightness: crown(8) 2 dims and exact box 2; crown(12) construction 3 dims")
def test_c07_crown():
    g8 = crown(8)
    assert len(checked(build_bipartite_box_representation(g8, bipartition_of(g8)))) == 2
    assert exact_boxicity(g8).value == 2
    g12 = crown(12)
    assert len(checked(build_bipartite_box_representation(g12, bipartition_of(g12)))) == 3


@criterion(8, "chromatic bound chi >= n/(2s+2): zero violations for n<=6, roberts(6) has s=0 and chi=3")
def test_c08_chromatic():
    for n in range(1, 7):
        assert survey(n, ("chromatic",)).violations == []
    row = survey_graph(roberts(6), ("chromatic",))
    assert row.values["s"] == "0" and row.values["chi"] == 3 and row.checks["chromatic"]


@criterion(9, "matching bound box <= min(nu+1, nu of complement): zero violations for n<=6, C4 gives 2")
def test_c09_matching():
    for n in range(1, 7):
        assert survey(n, ("matching",)).violations == []
    row = survey_graph(cycle(4), ("matching",))
    assert (row.values["nu"] + 1, row.values["nu_complement"]) == (3, 2)
    assert row.values["matching_bound"] == 2 == row.values["box"]


@pytest.mark.slow
@criterion(10, "properties: JSON round trips, recognition vs endpoint search n<=7, approx <= 2x exact n<=8, box <= cub and box <= n/2 n<=6")
def test_c10_properties():
    for g in atlas(7):
        assert bool(is_interval(g)) == endpoint_order_interval(g)
        assert bool(is_unit_interval(g)) == endpoint_order_proper_interval(g)
        for c in (min_vertex_cover(g), approx_vertex_cover(g)):
            checked(build_cub_representation(g, c))
            checked(build_box_representation(g, c))
        if g.n <= 6:
            b, k = exact_boxicity(g), exact_cubicity(g)
            checked(b.witness)
            checked(k.witness)
            assert b.value <= k.value and b.value <= g.n // 2
        if g.n == 7:
            for h in one_vertex_extensions(g):
                assert len(approx_vertex_cover(h)) <= 2 * len(min_vertex_cover(h))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
