# tilings: validation, Thurston's construction, flips and brute-force oracles
# src/lozenge_core/tiling.py

from __future__ import annotations

import heapq
import logging
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Literal

import numpy as np

from .domain import Domain
from .grid import (
    Lozenge,
    Triangle,
    Vertex,
    edge_sign,
    edge_triangles,
    lozenge_cells,
    lozenge_of,
    lozenge_relative_heights,
    triangle_edges,
    triangle_neighbours,
    triangles_at,
)
from .heights import HeightFunction, boundary_heights, height_from_tiling, tiling_from_height
from .io import NotFlippable, Untileable

logger = logging.getLogger(__name__)

Mode = Literal["minimal", "maximal"]
ExtremumKind = Literal["min", "max"]
FlipDirection = Literal["up", "down"]


@dataclass(frozen=True, eq=False)
class Tiling:
    domain: Domain
    lozenges: frozenset[Lozenge]

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Tiling):
            return NotImplemented
        return self.domain == other.domain and self.lozenges == other.lozenges

    def __hash__(self) -> int:
        return hash((self.domain, self.lozenges))

    def __repr__(self) -> str:
        return f"Tiling({len(self.lozenges)} lozenges on {self.domain!r})"

    def __len__(self) -> int:
        return len(self.lozenges)

    @cached_property
    def heights(self) -> HeightFunction:
        return height_from_tiling(self.domain, self)

    @property
    def key(self) -> tuple[int, ...]:
        return self.heights.key

    def sorted_lozenges(self) -> list[Lozenge]:
        return sorted(self.lozenges)


def validate(D: Domain, T: Tiling) -> bool:
    """True iff every triangle of D is covered by exactly one lozenge of T."""
    cover: Counter[Triangle] = Counter()
    for l in T.lozenges:
        for t in lozenge_cells(l):
            cover[t] += 1
    if len(cover) != len(D.triangles):
        return False
    return all(n == 1 for n in cover.values()) and all(t in D.triangles for t in cover)


def thurston(D: Domain, mode: Mode = "minimal") -> Tiling:
    """Build the least (or greatest) tiling by peeling lozenges off the boundary."""
    if mode not in ("minimal", "maximal"):
        raise ValueError(f"Unknown mode: {mode}")
    if len(D.triangles) % 2:
        raise Untileable(f"{D!r} has an odd number of triangles")

    known = boundary_heights(D)
    remaining = set(D.triangles)
    minimal = mode == "minimal"

    heap: list[tuple[int, int, int]] = []

    def push(v: Vertex) -> None:
        h = known[v]
        heapq.heappush(heap, (-h if minimal else h, v.p, v.q))

    for v in known:
        push(v)

    placed: list[Lozenge] = []
    while remaining:
        if not heap:
            raise Untileable("No boundary vertex left while triangles remain")
        _, p, q = heapq.heappop(heap)
        v = Vertex(p, q)
        here = [t for t in triangles_at(v) if t in remaining]
        if not here:
            continue
        t = min(here)

        # the edge of t at v along which v's neighbour is higher (minimal) or lower (maximal)
        others = [w if u == v else u for u, w in triangle_edges(t) if v in (u, w)]
        pick = next(x for x in others if (edge_sign(v, x) > 0) == minimal)
        t1, t2 = edge_triangles(v, pick)
        partner = t2 if t1 == t else t1
        if partner not in D.triangles:
            raise Untileable(f"Forced lozenge at {tuple(v)} leaves the domain")
        if partner not in remaining:
            raise Untileable(f"Forced lozenge at {tuple(v)} overlaps a placed lozenge")

        l = lozenge_of(t, partner)
        rel = lozenge_relative_heights(l)
        offset = known[v] - rel[v]
        for c, r in rel.items():
            h = r + offset
            if c in known:
                if known[c] != h:
                    raise Untileable(f"Height conflict at {tuple(c)}: {known[c]} vs {h}")
            else:
                known[c] = h
                push(c)
        remaining.discard(t)
        remaining.discard(partner)
        placed.append(l)
        push(v)

    logger.debug("thurston(%s) placed %d lozenges on %r", mode, len(placed), D)
    return Tiling(D, frozenset(placed))


@lru_cache(maxsize=256)
def minimal_tiling(D: Domain) -> Tiling:
    return thurston(D, "minimal")


@lru_cache(maxsize=256)
def maximal_tiling(D: Domain) -> Tiling:
    return thurston(D, "maximal")


def extrema_mask(D: Domain, values: np.ndarray, kind: ExtremumKind) -> np.ndarray:
    idx = D.index
    mask = np.zeros(len(idx.order), dtype=bool)
    inner = np.flatnonzero(idx.interior)
    if inner.size == 0:
        return mask
    nb = values[idx.ring[inner]]
    mine = values[inner][:, None]
    hit = np.all(nb > mine, axis=1) if kind == "min" else np.all(nb < mine, axis=1)
    mask[inner[hit]] = True
    return mask


def local_extrema(T: Tiling, kind: ExtremumKind) -> frozenset[Vertex]:
    """Interior vertices whose six neighbours are all higher (min) or all lower (max)."""
    order = T.domain.index.order
    mask = extrema_mask(T.domain, T.heights.values, kind)
    return frozenset(order[i] for i in np.flatnonzero(mask))


def flip(T: Tiling, v: Vertex, direction: FlipDirection) -> Tiling:
    v = Vertex(*v)
    kind: ExtremumKind = "min" if direction == "up" else "max"
    if v not in local_extrema(T, kind):
        raise NotFlippable(f"{tuple(v)} is not a local {kind}imum of the tiling")
    values = T.heights.values.copy()
    values[T.domain.index.position[v]] += 3 if direction == "up" else -3
    return tiling_from_height(T.domain, values)


def _up_flips(D: Domain, values: np.ndarray) -> Iterator[np.ndarray]:
    for i in np.flatnonzero(extrema_mask(D, values, "min")):
        nxt = values.copy()
        nxt[i] += 3
        yield nxt


def oracle_all_tilings(D: Domain) -> list[Tiling]:
    """Every tiling of D, by breadth-first up-flips from the minimal one."""
    start = minimal_tiling(D).heights.values.copy()
    seen = {start.tobytes()}
    queue = deque([start])
    found = [start]
    while queue:
        cur = queue.popleft()
        for nxt in _up_flips(D, cur):
            b = nxt.tobytes()
            if b not in seen:
                seen.add(b)
                found.append(nxt)
                queue.append(nxt)
    tilings = [tiling_from_height(D, vals) for vals in found]
    logger.debug("flip oracle found %d tilings of %r", len(tilings), D)
    return sorted(tilings, key=lambda t: t.key)


def recursive_tilings(D: Domain) -> list[Tiling]:
    """Every tiling of D by direct search, without heights or flips."""
    order = sorted(D.triangles)
    out: list[frozenset[Lozenge]] = []

    def place(i: int, covered: set[Triangle], chosen: list[Lozenge]) -> None:
        while i < len(order) and order[i] in covered:
            i += 1
        if i == len(order):
            out.append(frozenset(chosen))
            return
        t = order[i]
        for n in triangle_neighbours(t):
            if n in D.triangles and n not in covered:
                covered.update((t, n))
                chosen.append(lozenge_of(t, n))
                place(i + 1, covered, chosen)
                chosen.pop()
                covered.difference_update((t, n))

    place(0, set(), [])
    return sorted((Tiling(D, ls) for ls in out), key=lambda t: t.key)
