# triangular grid: vertices, directions, triangles, lozenges
# src/lozenge_core/grid.py

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, NamedTuple

Letter = Literal["a", "b", "c"]
Orientation = Literal["up", "down"]

LETTERS: tuple[Letter, ...] = ("a", "b", "c")
VECTORS: dict[str, tuple[int, int]] = {"a": (1, 0), "b": (0, 1), "c": (-1, -1)}

# neighbour offsets in counterclockwise order, starting along a
RING_OFFSETS: tuple[tuple[int, int], ...] = ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))


class Vertex(NamedTuple):
    p: int
    q: int


class Triangle(NamedTuple):
    orientation: Orientation
    anchor: Vertex


class Lozenge(NamedTuple):
    diagonal: Letter
    anchor: Vertex


@dataclass(frozen=True)
class Direction:
    letter: Letter
    sign: int  # +1 or -1

    @property
    def vector(self) -> tuple[int, int]:
        dp, dq = VECTORS[self.letter]
        return dp * self.sign, dq * self.sign

    @property
    def positive(self) -> bool:
        return self.sign > 0

    @property
    def symbol(self) -> str:
        return self.letter if self.sign > 0 else self.letter.upper()

    def inverse(self) -> "Direction":
        return Direction(self.letter, -self.sign)

    @classmethod
    def from_symbol(cls, ch: str) -> "Direction":
        letter = ch.lower()
        if letter not in VECTORS or len(ch) != 1:
            raise ValueError(f"not a direction symbol: {ch!r}")
        return cls(letter, 1 if ch.islower() else -1)  # type: ignore[arg-type]

    def __str__(self) -> str:
        return self.symbol


DIRECTIONS: tuple[Direction, ...] = tuple(Direction(l, s) for l in LETTERS for s in (1, -1))


def U(p: int, q: int) -> Triangle:
    return Triangle("up", Vertex(p, q))


def D(p: int, q: int) -> Triangle:
    return Triangle("down", Vertex(p, q))


def shift(v: Vertex, dp: int, dq: int) -> Vertex:
    return Vertex(v.p + dp, v.q + dq)


def step(v: Vertex, d: Direction) -> Vertex:
    dp, dq = d.vector
    return Vertex(v.p + dp, v.q + dq)


def inverse(d: Direction) -> Direction:
    return d.inverse()


def color(v: Vertex) -> int:
    return (v.p + v.q) % 3


def direction_between(u: Vertex, w: Vertex) -> Direction:
    diff = (w.p - u.p, w.q - u.q)
    for d in DIRECTIONS:
        if d.vector == diff:
            return d
    raise ValueError(f"{u} and {w} are not grid neighbours")


def edge_sign(u: Vertex, w: Vertex) -> int:
    """+1 if u -> w is a positive step, -1 if it is a negative one."""
    return direction_between(u, w).sign


def hexagon_ring(v: Vertex) -> list[Vertex]:
    return [Vertex(v.p + dp, v.q + dq) for dp, dq in RING_OFFSETS]


def triangle_vertices(t: Triangle) -> tuple[Vertex, Vertex, Vertex]:
    """Vertices in counterclockwise order, starting at the anchor."""
    p, q = t.anchor
    if t.orientation == "up":
        return Vertex(p, q), Vertex(p + 1, q), Vertex(p + 1, q + 1)
    return Vertex(p, q), Vertex(p + 1, q + 1), Vertex(p, q + 1)


def triangle_edges(t: Triangle) -> tuple[tuple[Vertex, Vertex], ...]:
    a, b, c = triangle_vertices(t)
    return (a, b), (b, c), (c, a)


def triangles_at(v: Vertex) -> tuple[Triangle, ...]:
    """The six triangles around v, in the same cyclic order as hexagon_ring."""
    p, q = v
    return (U(p, q), D(p, q), U(p - 1, q), D(p - 1, q - 1), U(p - 1, q - 1), D(p, q - 1))


def edge_triangles(u: Vertex, w: Vertex) -> tuple[Triangle, Triangle]:
    common = sorted(set(triangles_at(u)) & set(triangles_at(w)))
    if len(common) != 2:
        raise ValueError(f"{u} and {w} are not grid neighbours")
    return common[0], common[1]


def triangle_neighbours(t: Triangle) -> tuple[Triangle, ...]:
    out = []
    for u, w in triangle_edges(t):
        t1, t2 = edge_triangles(u, w)
        out.append(t2 if t1 == t else t1)
    return tuple(out)


def lozenge_cells(l: Lozenge) -> tuple[Triangle, Triangle]:
    p, q = l.anchor
    if l.diagonal == "a":
        return U(p, q), D(p, q - 1)
    if l.diagonal == "b":
        return D(p, q), U(p - 1, q)
    return U(p, q), D(p, q)


def lozenge_of(t1: Triangle, t2: Triangle) -> Lozenge:
    shared = sorted(set(triangle_vertices(t1)) & set(triangle_vertices(t2)))
    if t1 == t2 or len(shared) != 2:
        raise ValueError(f"{t1} and {t2} do not share an edge")
    u, w = shared
    diff = (w.p - u.p, w.q - u.q)
    letter = {(1, 0): "a", (0, 1): "b", (1, 1): "c"}[diff]
    return Lozenge(letter, u)  # type: ignore[arg-type]


def lozenge_diagonal(l: Lozenge) -> tuple[Vertex, Vertex]:
    """(tail, head) of the diagonal, oriented along the positive letter."""
    p, q = l.anchor
    if l.diagonal == "a":
        return Vertex(p, q), Vertex(p + 1, q)
    if l.diagonal == "b":
        return Vertex(p, q), Vertex(p, q + 1)
    return Vertex(p + 1, q + 1), Vertex(p, q)


def lozenge_vertices(l: Lozenge) -> tuple[Vertex, Vertex, Vertex, Vertex]:
    """Corners in cyclic order: tail, side, head, side."""
    tail, head = lozenge_diagonal(l)
    t1, t2 = lozenge_cells(l)
    (s1,) = set(triangle_vertices(t1)) - {tail, head}
    (s2,) = set(triangle_vertices(t2)) - {tail, head}
    return tail, s1, head, s2


def lozenge_relative_heights(l: Lozenge) -> dict[Vertex, int]:
    """Heights of the corners relative to the diagonal's tail."""
    tail, s1, head, s2 = lozenge_vertices(l)
    return {
        tail: 0,
        head: -2,
        s1: edge_sign(tail, s1),
        s2: edge_sign(tail, s2),
    }
