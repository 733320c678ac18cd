# cubes, piles, seeds and their maximal fillings; the D^k chain
# src/lozenge_core/seeds.py

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .domain import Domain, pseudo_hexagon
from .grid import Triangle, Vertex, shift, triangles_at
from .heights import distance, is_height_function, tiling_from_height
from .io import NotAPlanePartition, NotFertile, NotFlippable, UnsatisfiableCube
from .partitions import PlanePartition, as_plane_partition
from .tiling import Tiling, extrema_mask, maximal_tiling, minimal_tiling

logger = logging.getLogger(__name__)


class Cube(NamedTuple):
    vertex: Vertex
    level: int  # 1 = first cube above the minimal tiling


@dataclass(frozen=True)
class Pile:
    domain: Domain
    cubes: frozenset[Cube]

    def __len__(self) -> int:
        return len(self.cubes)

    def columns(self) -> dict[Vertex, int]:
        out: dict[Vertex, int] = defaultdict(int)
        for c in self.cubes:
            out[c.vertex] = max(out[c.vertex], c.level)
        return dict(out)

    def heights(self) -> np.ndarray:
        values = minimal_tiling(self.domain).heights.values.copy()
        pos = self.domain.index.position
        for v, n in self.columns().items():
            values[pos[v]] += 3 * n
        return values

    def tiling(self) -> Tiling:
        return tiling_from_height(self.domain, self.heights())


def pile_of(T: Tiling) -> Pile:
    """All cubes present in T, measured from the minimal tiling of its domain."""
    D = T.domain
    levels = (T.heights.values - minimal_tiling(D).heights.values) // 3
    order = D.index.order
    cubes = frozenset(Cube(order[i], k) for i in np.flatnonzero(levels) for k in range(1, int(levels[i]) + 1))
    return Pile(D, cubes)


@dataclass(frozen=True)
class Seed:
    center: Vertex
    host: Tiling


@dataclass(frozen=True)
class SeedRecord:
    seed: Seed
    order: int
    max_pile: Pile
    max_range: frozenset[Triangle]
    shape: PlanePartition


@dataclass(frozen=True)
class Generation:
    order: int
    tiling: Tiling  # D^order
    records: tuple[SeedRecord, ...]


def find_seeds(T: Tiling) -> list[Seed]:
    order = T.domain.index.order
    mask = extrema_mask(T.domain, T.heights.values, "min")
    return [Seed(order[i], T) for i in np.flatnonzero(mask)]


def filling_columns(center: Vertex, A: Sequence[Sequence[int]]) -> dict[Vertex, int]:
    """Number of cubes the filling A stacks on each vertex, from the corner at center."""
    out: dict[Vertex, int] = defaultdict(int)
    for i, row in enumerate(A):
        for j, n in enumerate(row):
            for k in range(n):
                out[shift(center, i - k, j - k)] += 1
    return dict(out)


def maximal_filling(seed: Seed, context: Tiling, order: int = 0) -> SeedRecord:
    """Grow the largest compact pile cornered at the seed inside the context tiling."""
    D = context.domain
    idx = D.index
    pos = idx.position
    values = context.heights.values.copy()
    c = seed.center
    h0 = int(values[pos[c]])
    if not extrema_mask(D, values, "min")[pos[c]]:
        raise NotFlippable(f"{tuple(c)} is not a seed of the context tiling")

    def flippable(i: int) -> bool:
        if not idx.interior[i]:
            return False
        return bool(np.all(values[idx.ring[i]] > values[i]))

    values[pos[c]] += 3
    pile = {(0, 0, 0)}
    grew = True
    while grew:
        grew = False
        frontier = sorted(
            {(i + di, j + dj, k + dk) for i, j, k in pile for di, dj, dk in ((1, 0, 0), (0, 1, 0), (0, 0, 1))}
            - pile
        )
        for i, j, k in frontier:
            if not _supported(pile, i, j, k):
                continue
            v = shift(c, i - k, j - k)
            at = pos.get(v)
            if at is None or values[at] != h0 + i + j + k or not flippable(at):
                continue
            values[at] += 3
            pile.add((i, j, k))
            grew = True

    rows = 1 + max(i for i, _, _ in pile)
    cols = 1 + max(j for _, j, _ in pile)
    counts = [[0] * cols for _ in range(rows)]
    for i, j, _ in pile:
        counts[i][j] += 1
    shape = as_plane_partition(counts)

    base = minimal_tiling(D).heights.values
    before = context.heights.values
    stacked: dict[Vertex, list[int]] = defaultdict(list)
    for i, j, k in pile:
        stacked[shift(c, i - k, j - k)].append(k)
    cubes = set()
    for v, ks in stacked.items():
        first = int(before[pos[v]] - base[pos[v]]) // 3
        cubes.update(Cube(v, first + n + 1) for n in range(len(ks)))

    rng = frozenset(t for v in stacked for t in triangles_at(v))
    logger.debug("seed %s (order %d): %d cubes, shape %s", tuple(c), order, len(pile), shape)
    return SeedRecord(seed, order, Pile(D, frozenset(cubes)), rng, shape)


def _supported(pile: set, i: int, j: int, k: int) -> bool:
    # compactness: every cube below (i, j, k) towards the corner is present
    return all(s in pile for s in ((i - 1, j, k), (i, j - 1, k), (i, j, k - 1)) if min(s) >= 0)


def proper_seeds(T: Tiling, order: int = 0) -> list[SeedRecord]:
    """Seeds whose maximal range is not strictly inside another seed's."""
    records = [maximal_filling(s, T, order) for s in find_seeds(T)]
    return [r for r in records if not any(r.max_range < o.max_range for o in records)]


@lru_cache(maxsize=64)
def seed_generations(zone: Domain) -> tuple[Generation, ...]:
    tmin = minimal_tiling(zone)
    tmax = maximal_tiling(zone)
    bound = distance(tmin.heights, tmax.heights) // 3
    pos = zone.index.position

    gens: list[Generation] = []
    current = tmin
    while current.key != tmax.key:
        if len(gens) > bound:
            raise NotFertile(f"No progress towards the maximal tiling of {zone!r}")
        records = proper_seeds(current, order=len(gens))
        if not records:
            raise NotFertile(f"{zone!r} has no seed but is not frozen")
        gens.append(Generation(len(gens), current, tuple(records)))

        values = current.heights.values.copy()
        for r in records:
            for v, n in r.max_pile.columns().items():
                values[pos[v]] = max(values[pos[v]], tmin.heights.values[pos[v]] + 3 * n)
        current = tiling_from_height(zone, values)
        logger.debug("generation %d: %d proper seeds", len(gens) - 1, len(records))
    return tuple(gens)


def dk_chain(zone: Domain) -> list[Tiling]:
    """[D^0 = Min, D^1, ..., Max]."""
    return [g.tiling for g in seed_generations(zone)] + [maximal_tiling(zone)]


def least_height_above(zone: Domain, lower: np.ndarray) -> np.ndarray:
    """Pointwise-least height function h >= lower, or UnsatisfiableCube."""
    idx = zone.index
    tails, heads = idx.edges[:, 0], idx.edges[:, 1]
    h = np.array(lower, dtype=np.int64)
    while True:
        before = h.copy()
        np.maximum.at(h, heads, h[tails] - 2)
        np.maximum.at(h, tails, h[heads] - 1)
        if np.array_equal(h, before):
            break
    bmask = ~idx.interior
    if not np.array_equal(h[bmask], np.asarray(lower)[bmask]):
        raise UnsatisfiableCube("Constraints force the boundary to move")
    if not is_height_function(zone, h):
        raise UnsatisfiableCube("Constraints admit no height function")
    return h


def min_with_cubes(zone: Domain, constraints: Iterable[Cube]) -> Tiling:
    """Least tiling of the zone containing every given cube."""
    hmin = minimal_tiling(zone).heights.values
    hmax = maximal_tiling(zone).heights.values
    pos = zone.index.position
    lower = hmin.copy()
    for cube in constraints:
        v = Vertex(*cube.vertex)
        if v not in pos or cube.level < 1:
            raise UnsatisfiableCube(f"No cube {tuple(v)}/{cube.level} in this zone")
        i = pos[v]
        target = hmin[i] + 3 * cube.level
        if target > hmax[i]:
            raise UnsatisfiableCube(f"Cube {tuple(v)}/{cube.level} exceeds the maximal tiling")
        lower[i] = max(lower[i], target)
    return tiling_from_height(zone, least_height_above(zone, lower))


def c_minimal_tilings(zone: Domain) -> dict[Cube, Tiling]:
    """One least tiling per cube of the maximal tiling."""
    return {cube: min_with_cubes(zone, [cube]) for cube in sorted(pile_of(maximal_tiling(zone)).cubes)}


def fundamental_intervals(zone: Domain) -> list[tuple[Tiling, Tiling]]:
    chain = dk_chain(zone)
    return [(chain[k], chain[k + 1]) for k in range(len(chain) - 1)]


def tiling_of_pile(P: Sequence[Sequence[int]], A: Sequence[Sequence[int]]) -> Tiling:
    """The tiling of pseudo_hexagon(P) that carries the compact pile A."""
    P = as_plane_partition(P)
    A = as_plane_partition(A)
    if len(A) > len(P) or any(
        x > y for ra, rp in zip(A, P) for x, y in zip(ra, rp + (0,) * len(ra))
    ):
        raise NotAPlanePartition(f"{A} does not fit under {P}")
    D = pseudo_hexagon(P)
    tmin = minimal_tiling(D)
    seeds = find_seeds(tmin)
    if len(seeds) != 1:
        raise NotFertile(f"Expected one seed in the minimal tiling, found {len(seeds)}")
    pos = D.index.position
    values = tmin.heights.values.copy()
    for v, n in filling_columns(seeds[0].center, A).items():
        values[pos[v]] += 3 * n
    return tiling_from_height(D, values)
