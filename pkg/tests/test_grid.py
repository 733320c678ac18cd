from __future__ import annotations

import pytest

from lozenge_core.grid import (
    DIRECTIONS,
    Direction,
    Lozenge,
    Vertex,
    color,
    direction_between,
    edge_sign,
    edge_triangles,
    hexagon_ring,
    inverse,
    lozenge_cells,
    lozenge_diagonal,
    lozenge_of,
    lozenge_vertices,
    step,
    triangle_edges,
    triangle_neighbours,
    triangle_vertices,
    triangles_at,
    D,
    U,
)


def test_step_basis():
    assert step(Vertex(0, 0), Direction("a", 1)) == (1, 0)
    assert step(Vertex(0, 0), Direction("c", 1)) == (-1, -1)
    assert step(Vertex(2, 1), Direction("b", -1)) == (2, 0)


@pytest.mark.parametrize("d", DIRECTIONS)
def test_step_inverse_roundtrip(d):
    v = Vertex(5, -3)
    assert step(step(v, d), inverse(d)) == v
    assert inverse(d).letter == d.letter and inverse(d).sign == -d.sign


def test_six_directions_and_symbols():
    assert len(DIRECTIONS) == 6
    assert {d.symbol for d in DIRECTIONS} == set("abcABC")
    assert Direction.from_symbol("B") == Direction("b", -1)
    with pytest.raises(ValueError):
        Direction.from_symbol("x")


@pytest.mark.parametrize("letter", "abc")
def test_color_shifts_by_one_on_positive_steps(letter):
    v = Vertex(4, 7)
    assert color(step(v, Direction(letter, 1))) == (color(v) + 1) % 3


def test_hexagon_ring():
    assert hexagon_ring(Vertex(0, 0)) == [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]
    ring = hexagon_ring(Vertex(5, 3))
    assert ring == [(p + 5, q + 3) for p, q in hexagon_ring(Vertex(0, 0))]
    for i in range(6):
        edge_sign(ring[i], ring[(i + 1) % 6])  # adjacent, no error


def test_triangle_steps_use_each_letter_once():
    for t in (U(0, 0), D(0, 0)):
        letters = sorted(Direction.from_symbol(s).letter for s in _word(t))
        assert letters == ["a", "b", "c"]


def _word(t):
    return [direction_between(u, w).symbol for u, w in triangle_edges(t)]


def test_up_edges_positive_down_edges_negative():
    assert _word(U(3, 2)) == ["a", "b", "c"]
    assert _word(D(3, 2)) == ["C", "A", "B"]


def test_lozenge_cells_share_the_diagonal():
    for letter in "abc":
        l = Lozenge(letter, Vertex(0, 0))
        t1, t2 = lozenge_cells(l)
        assert t1 != t2
        shared = set(triangle_vertices(t1)) & set(triangle_vertices(t2))
        assert shared == set(lozenge_diagonal(l))
        assert lozenge_of(t1, t2) == l


def test_lozenge_cells_distinct_per_anchor():
    pairs = {frozenset(lozenge_cells(Lozenge(x, Vertex(0, 0)))) for x in "abc"}
    assert len(pairs) == 3
    assert lozenge_cells(Lozenge("c", Vertex(0, 0))) == (U(0, 0), D(0, 0))


def test_lozenge_vertices_cycle():
    l = Lozenge("a", Vertex(0, 0))
    tail, s1, head, s2 = lozenge_vertices(l)
    assert (tail, head) == ((0, 0), (1, 0))
    assert {s1, s2} == {(1, 1), (0, -1)}
    for u, w in ((tail, s1), (s1, head), (head, s2), (s2, tail)):
        edge_sign(u, w)


def test_triangles_at_and_edges():
    around = triangles_at(Vertex(0, 0))
    assert len(set(around)) == 6
    for t in around:
        assert Vertex(0, 0) in triangle_vertices(t)
    t1, t2 = edge_triangles(Vertex(0, 0), Vertex(1, 1))
    assert {t1, t2} == {U(0, 0), D(0, 0)}
    assert len(set(triangle_neighbours(U(0, 0)))) == 3
    with pytest.raises(ValueError):
        edge_triangles(Vertex(0, 0), Vertex(2, 0))


def test_edge_sign():
    assert edge_sign(Vertex(0, 0), Vertex(1, 0)) == 1
    assert edge_sign(Vertex(1, 0), Vertex(0, 0)) == -1
    assert edge_sign(Vertex(0, 0), Vertex(-1, -1)) == 1
    assert edge_sign(Vertex(0, 0), Vertex(1, 1)) == -1
