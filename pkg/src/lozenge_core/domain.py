# contour words, closed paths and the domains they enclose
# src/lozenge_core/domain.py

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .grid import (
    Direction,
    RING_OFFSETS,
    Triangle,
    Vertex,
    direction_between,
    edge_sign,
    shift,
    step,
    triangle_edges,
    triangle_vertices,
    triangles_at,
)
from .io import (
    BadLetter,
    BadSize,
    EmptyContour,
    EmptyInterior,
    InputError,
    NotClosed,
    SelfIntersecting,
)
from .partitions import as_plane_partition

logger = logging.getLogger(__name__)

ClosedPath = tuple[Vertex, ...]


@dataclass(frozen=True)
class ContourWord:
    steps: tuple[Direction, ...]

    def __iter__(self) -> Iterator[Direction]:
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return "".join(d.symbol for d in self.steps)


def parse_contour(text: str) -> ContourWord:
    steps = []
    for ch in text:
        if ch.isspace():
            continue
        try:
            steps.append(Direction.from_symbol(ch))
        except ValueError as e:
            raise BadLetter(f"Unexpected letter {ch!r} in contour word (allowed: a b c A B C)") from e
    if not steps:
        raise EmptyContour("Contour word is empty")
    return ContourWord(tuple(steps))


def trace(w: ContourWord | str, start: Vertex = Vertex(0, 0)) -> ClosedPath:
    """Walk the word from start. The returned cycle lists each vertex once."""
    if isinstance(w, str):
        w = parse_contour(w)
    if len(w) == 0:
        raise EmptyContour("Contour word is empty")

    start = Vertex(*start)
    path = [start]
    seen = {start}
    v = start
    for i, d in enumerate(w):
        v = step(v, d)
        if i == len(w) - 1:
            break
        if v in seen:
            raise SelfIntersecting(f"Contour revisits {tuple(v)} after {i + 1} steps")
        seen.add(v)
        path.append(v)

    if v != start:
        raise NotClosed(f"Contour ends at {tuple(v)}, not at its start {tuple(start)}")
    return tuple(path)


def l_label_is_trivial(w: ContourWord | str) -> bool:
    if isinstance(w, str):
        w = parse_contour(w)
    net: Counter[str] = Counter()
    for d in w:
        net[d.letter] += d.sign
    return all(net[letter] == 0 for letter in "abc")


def _signed_area2(path: Sequence[Vertex]) -> int:
    s = 0
    n = len(path)
    for i in range(n):
        p0, q0 = path[i]
        p1, q1 = path[(i + 1) % n]
        s += p0 * q1 - p1 * q0
    return s


def _winding_numbers(path: Sequence[Vertex], px: np.ndarray, py: np.ndarray) -> np.ndarray:
    # exact integer crossing test; the query points never lie on a grid line
    wn = np.zeros(px.shape, dtype=np.int64)
    n = len(path)
    for i in range(n):
        x0, y0 = 3 * path[i].p, 3 * path[i].q
        x1, y1 = 3 * path[(i + 1) % n].p, 3 * path[(i + 1) % n].q
        is_left = (x1 - x0) * (py - y0) - (px - x0) * (y1 - y0)
        up = (y0 <= py) & (y1 > py) & (is_left > 0)
        down = (y0 > py) & (y1 <= py) & (is_left < 0)
        wn += up.astype(np.int64) - down.astype(np.int64)
    return wn


def enclose(path: ClosedPath) -> "Domain":
    """Triangles of positive winding number; the boundary comes back counterclockwise."""
    path = tuple(Vertex(*v) for v in path)
    if len(path) < 3:
        raise EmptyInterior("A closed path needs at least three vertices to enclose a triangle")
    if _signed_area2(path) < 0:
        path = (path[0],) + tuple(reversed(path[1:]))

    ps = [v.p for v in path]
    qs = [v.q for v in path]
    grid_p, grid_q = np.meshgrid(
        np.arange(min(ps) - 1, max(ps) + 1, dtype=np.int64),
        np.arange(min(qs) - 1, max(qs) + 1, dtype=np.int64),
        indexing="ij",
    )
    cp = grid_p.ravel()
    cq = grid_q.ravel()

    # centroids scaled by 3: U -> (3p+2, 3q+1), D -> (3p+1, 3q+2)
    up_in = _winding_numbers(path, 3 * cp + 2, 3 * cq + 1) > 0
    down_in = _winding_numbers(path, 3 * cp + 1, 3 * cq + 2) > 0

    tris = [Triangle("up", Vertex(int(p), int(q))) for p, q in zip(cp[up_in], cq[up_in])]
    tris += [Triangle("down", Vertex(int(p), int(q))) for p, q in zip(cp[down_in], cq[down_in])]
    if not tris:
        raise EmptyInterior("The contour encloses no triangle")

    logger.debug("enclosed %d triangles from a %d-step contour", len(tris), len(path))
    return Domain.from_triangles(tris, start=path[0])


@dataclass(frozen=True)
class DomainIndex:
    """Array view of a domain: vertex numbering, edges and neighbour table."""

    order: tuple[Vertex, ...]
    position: dict[Vertex, int]
    edges: np.ndarray  # (E, 2) positions, tail -> head along a positive step
    interior: np.ndarray  # bool mask over order
    ring: np.ndarray  # (N, 6) positions of hexagon_ring neighbours, -1 when absent
    start: int


@dataclass(frozen=True, eq=False)
class Domain:
    triangles: frozenset[Triangle]
    boundary: ClosedPath  # counterclockwise, boundary[0] is the height base

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Domain):
            return NotImplemented
        return self.start == other.start and self.triangles == other.triangles

    def __hash__(self) -> int:
        return hash((self.start, self.triangles))

    def __repr__(self) -> str:
        return f"Domain(triangles={len(self.triangles)}, start={tuple(self.start)})"

    @classmethod
    def from_triangles(cls, triangles: Iterable[Triangle], start: Optional[Vertex] = None) -> "Domain":
        tris = frozenset(Triangle(t.orientation, Vertex(*t.anchor)) for t in triangles)
        if not tris:
            raise EmptyInterior("Empty triangle set")

        directed = {e for t in tris for e in triangle_edges(t)}
        succ: dict[Vertex, Vertex] = {}
        for u, w in directed:
            if (w, u) in directed:
                continue
            if u in succ:
                raise SelfIntersecting(f"Boundary touches itself at {tuple(u)}")
            succ[u] = w

        if start is None:
            start = min(succ)
        start = Vertex(*start)
        if start not in succ:
            raise InputError(f"Start vertex {tuple(start)} is not on the boundary")

        cycle = [start]
        v = succ[start]
        while v != start:
            cycle.append(v)
            v = succ[v]
        if len(cycle) != len(succ):
            raise SelfIntersecting("Triangle set has a hole or several components")
        return cls(tris, tuple(cycle))

    @property
    def start(self) -> Vertex:
        return self.boundary[0]

    @property
    def size(self) -> int:
        return len(self.triangles)

    @cached_property
    def vertices(self) -> frozenset[Vertex]:
        return frozenset(v for t in self.triangles for v in triangle_vertices(t))

    @cached_property
    def boundary_set(self) -> frozenset[Vertex]:
        return frozenset(self.boundary)

    @cached_property
    def interior_vertices(self) -> frozenset[Vertex]:
        return self.vertices - self.boundary_set

    @cached_property
    def contour(self) -> ContourWord:
        return contour_of(self)

    @cached_property
    def index(self) -> DomainIndex:
        order = tuple(sorted(self.vertices))
        position = {v: i for i, v in enumerate(order)}

        edges = set()
        for t in self.triangles:
            for u, w in triangle_edges(t):
                if edge_sign(u, w) < 0:
                    u, w = w, u
                edges.add((position[u], position[w]))
        edge_arr = np.array(sorted(edges), dtype=np.int64).reshape(-1, 2)

        interior = np.array([v not in self.boundary_set for v in order], dtype=bool)
        ring = np.full((len(order), 6), -1, dtype=np.int64)
        for i, v in enumerate(order):
            for k, (dp, dq) in enumerate(RING_OFFSETS):
                ring[i, k] = position.get(shift(v, dp, dq), -1)

        return DomainIndex(order, position, edge_arr, interior, ring, position[self.start])


def contour_of(D: Domain) -> ContourWord:
    b = D.boundary
    return ContourWord(tuple(direction_between(b[i], b[(i + 1) % len(b)]) for i in range(len(b))))


def hexagon(x: int, y: int, z: int) -> Domain:
    if min(x, y, z) < 1:
        raise BadSize(f"Hexagon sides must be >= 1, got {x},{y},{z}")
    word = "a" * x + "C" * y + "b" * z + "A" * x + "c" * y + "B" * z
    return enclose(trace(parse_contour(word), Vertex(0, 0)))


def pseudo_hexagon(P: Sequence[Sequence[int]]) -> Domain:
    """Shadow of the compact pile P, translated so its smallest vertex is (0,0)."""
    P = as_plane_partition(P)
    centers = {Vertex(i - k, j - k) for i, row in enumerate(P) for j, n in enumerate(row) for k in range(n)}
    if not centers:
        raise BadSize("Pseudo-hexagon of an empty pile")

    tris = {t for c in centers for t in triangles_at(c)}
    low = min(v for t in tris for v in triangle_vertices(t))
    moved = [Triangle(t.orientation, shift(t.anchor, -low.p, -low.q)) for t in tris]
    return Domain.from_triangles(moved, start=Vertex(0, 0))
