from __future__ import annotations

import logging
import time

import pytest

from lozenge_core.domain import Domain, enclose, hexagon, trace
from lozenge_core.grid import D, Lozenge, U, Vertex
from lozenge_core.heights import compare, distance
from lozenge_core.io import NotFlippable, Untileable
from lozenge_core.tiling import (
    Tiling,
    flip,
    local_extrema,
    maximal_tiling,
    minimal_tiling,
    oracle_all_tilings,
    recursive_tilings,
    thurston,
    validate,
)

from conftest import SMALL_DOMAINS


def _big_triangle() -> Domain:
    # side-2 triangle: three up triangles around one down triangle
    return Domain.from_triangles([D(0, 0), U(0, 0), U(0, 1), U(-1, 0)])


def test_thurston_tiles_the_domain(unit_hexagon):
    for mode in ("minimal", "maximal"):
        T = thurston(unit_hexagon, mode)
        assert len(T) == 3
        assert validate(unit_hexagon, T)
    assert minimal_tiling(unit_hexagon) != maximal_tiling(unit_hexagon)


def test_thurston_rejects_unknown_mode(unit_hexagon):
    with pytest.raises(ValueError):
        thurston(unit_hexagon, "middle")


def test_odd_domain_is_untileable():
    with pytest.raises(Untileable):
        thurston(enclose(trace("abc")))


def test_big_triangle_is_untileable():
    dom = _big_triangle()
    assert len(dom.triangles) == 4
    with pytest.raises(Untileable):
        minimal_tiling(dom)
    assert recursive_tilings(dom) == []


def test_validate_rejects_overlap_and_gaps(unit_hexagon):
    T = minimal_tiling(unit_hexagon)
    ls = sorted(T.lozenges)
    assert not validate(unit_hexagon, Tiling(unit_hexagon, frozenset(ls[:2])))
    stray = Lozenge("a", Vertex(10, 10))
    assert not validate(unit_hexagon, Tiling(unit_hexagon, frozenset(ls[:2] + [stray])))
    assert not validate(unit_hexagon, Tiling(unit_hexagon, frozenset(ls + [stray])))


@pytest.mark.parametrize("make,count", SMALL_DOMAINS)
def test_oracles_agree(make, count):
    dom = make()
    by_flips = oracle_all_tilings(dom)
    by_search = recursive_tilings(dom)
    assert len(by_flips) == count
    assert [t.key for t in by_flips] == [t.key for t in by_search]
    assert all(validate(dom, t) for t in by_search)


@pytest.mark.parametrize("make,_", SMALL_DOMAINS)
def test_min_and_max_bound_every_tiling(make, _):
    dom = make()
    lo = minimal_tiling(dom).heights
    hi = maximal_tiling(dom).heights
    for T in oracle_all_tilings(dom):
        assert compare(lo, T.heights) in ("less", "equal")
        assert compare(T.heights, hi) in ("less", "equal")
    assert not local_extrema(minimal_tiling(dom), "max")
    assert not local_extrema(maximal_tiling(dom), "min")


def test_flip_unit_hexagon(unit_hexagon):
    lo = minimal_tiling(unit_hexagon)
    hi = maximal_tiling(unit_hexagon)
    assert local_extrema(lo, "min") == {Vertex(1, 1)}
    assert flip(lo, Vertex(1, 1), "up") == hi
    assert flip(hi, Vertex(1, 1), "down") == lo
    with pytest.raises(NotFlippable):
        flip(lo, Vertex(1, 1), "down")
    with pytest.raises(NotFlippable):
        flip(lo, Vertex(0, 0), "up")


def test_flips_move_one_vertex_by_three():
    dom = hexagon(2, 2, 2)
    T = minimal_tiling(dom)
    for v in local_extrema(T, "min"):
        up = flip(T, v, "up")
        diff = up.heights.values - T.heights.values
        assert sorted(diff.tolist())[-1] == 3
        assert int(abs(diff).sum()) == 3


def test_tiling_identity(unit_hexagon):
    T = minimal_tiling(unit_hexagon)
    same = Tiling(unit_hexagon, frozenset(T.lozenges))
    assert T == same and hash(T) == hash(same)
    assert T.key == same.key
    assert T.sorted_lozenges() == sorted(T.lozenges)


def _climb(lo: Tiling, hi: Tiling) -> int:
    """Up-flip lo towards hi one vertex at a time; returns the number of flips."""
    steps = 0
    cur = lo
    while cur != hi:
        below = [v for v in local_extrema(cur, "min") if cur.heights[v] < hi.heights[v]]
        assert below, "no up-flip stays under the target"
        cur = flip(cur, min(below), "up")
        assert compare(cur.heights, hi.heights) in ("less", "equal")
        steps += 1
    return steps


@pytest.mark.parametrize("make,_", SMALL_DOMAINS)
def test_up_flip_path_has_length_distance_over_three(make, _):
    tilings = oracle_all_tilings(make())
    for a in tilings:
        for b in tilings:
            if compare(a.heights, b.heights) in ("less", "equal"):
                assert 3 * _climb(a, b) == distance(a.heights, b.heights)


def test_thurston_on_a_large_hexagon(caplog):
    dom = hexagon(60, 60, 60)
    started = time.perf_counter()
    with caplog.at_level(logging.DEBUG, logger="lozenge_core.tiling"):
        lo = thurston(dom, "minimal")
        hi = thurston(dom, "maximal")
    assert time.perf_counter() - started < 60
    assert len(lo) == len(hi) == len(dom.triangles) // 2 == 10800
    assert any("placed 10800 lozenges" in r.getMessage() for r in caplog.records)
    assert distance(lo.heights, hi.heights) == 3 * 60**3
