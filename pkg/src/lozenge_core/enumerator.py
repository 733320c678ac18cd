# exactly-once generation of every tiling, zone by zone and seed generation by generation
# src/lozenge_core/enumerator.py

from __future__ import annotations

import concurrent.futures
import itertools
import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

import numpy as np

from .codec import seed_record_to_json
from .domain import Domain
from .fracture import Zone, fracture_zones
from .heights import is_height_function, tiling_from_height
from .io import DuplicateDetected, NotAHeightFunction
from .lattice import TilingLattice, Stitcher, build_lattice, product
from .partitions import all_limited_plane_partitions, weight
from .seeds import filling_columns, least_height_above, seed_generations
from .tiling import Tiling, minimal_tiling

logger = logging.getLogger(__name__)

# done, total, label, message
ProgressCb = Callable[[int, int, str, str], None]
TilingSink = Callable[[Tiling], None]
SeedSink = Callable[[dict], None]


@dataclass(frozen=True)
class EnumerateOptions:
    jobs: int = 1  # zones enumerated on a thread pool when > 1
    seed_sink: Optional[SeedSink] = None  # receives one dict per seed record and generation


@dataclass
class EnumerationStats:
    emitted: int = 0
    duplicates: int = 0
    zones: int = 0
    fertile_zones: int = 0
    generation_sizes: list[list[int]] = field(default_factory=list)  # per fertile zone

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class EnumerationResult:
    domain: Domain
    zones: tuple[tuple[Zone, TilingLattice], ...]
    full: TilingLattice
    stats: EnumerationStats


def _report_records(gen, sink: SeedSink) -> None:
    for r in gen.records:
        sink({"generation": gen.order, **seed_record_to_json(r)})


def enumerate_zone(
    zone: Domain,
    progress_cb: Optional[ProgressCb] = None,
    *,
    seed_sink: Optional[SeedSink] = None,
    sizes: Optional[list[int]] = None,
) -> TilingLattice:
    """Lattice of every tiling of one fertile zone, each produced once."""
    gens = seed_generations(zone)
    pos = zone.index.position
    interior = zone.index.interior
    hmin = minimal_tiling(zone).heights.values

    found: list[np.ndarray] = [hmin.copy()]
    keys = {tuple(hmin[interior].tolist())}
    if sizes is not None:
        sizes.append(1)

    for g in gens:
        if seed_sink is not None:
            _report_records(g, seed_sink)
        dk = g.tiling.heights.values
        snapshot = list(found)
        fillings = [list(all_limited_plane_partitions(r.shape)) for r in g.records]
        total = math.prod(len(f) for f in fillings)
        before = len(found)

        for n, family in zip(itertools.count(), itertools.product(*fillings)):
            if progress_cb and n % 64 == 0:
                progress_cb(n, total, f"generation {g.order}", f"{len(found)} tilings")
            if all(weight(A) == 0 for A in family):
                continue

            cols = np.zeros(len(pos), dtype=np.int64)
            for r, A in zip(g.records, family):
                for v, c in filling_columns(r.seed.center, A).items():
                    cols[pos[v]] += c

            support = cols > 0
            lower = hmin.copy()
            lower[support] = dk[support] + 3 * cols[support]
            lo = least_height_above(zone, lower) - 3 * cols

            for t in snapshot:
                if np.all(t >= lo) and np.all(t <= dk):
                    new = t + 3 * cols
                    if not is_height_function(zone, new):
                        raise NotAHeightFunction(f"Adding a filling of generation {g.order} broke the tiling")
                    key = tuple(new[interior].tolist())
                    if key in keys:
                        raise DuplicateDetected(f"Tiling produced twice in generation {g.order}")
                    keys.add(key)
                    found.append(new)

        if sizes is not None:
            sizes.append(len(found) - before)
        if progress_cb:
            progress_cb(total, total, f"generation {g.order}", f"{len(found)} tilings")
        logger.debug("generation %d of %r: %d new tilings", g.order, zone, len(found) - before)

    return build_lattice(tiling_from_height(zone, v) for v in found)


def _zone_lattices(
    D: Domain,
    options: EnumerateOptions,
    progress_cb: Optional[ProgressCb],
    stats: EnumerationStats,
) -> list[tuple[Zone, TilingLattice]]:
    minimal_tiling(D)  # Untileable short-circuit
    decomp = fracture_zones(D)
    stats.zones = len(decomp.zones)
    stats.fertile_zones = len(decomp.fertile)
    sizes = [[] for _ in decomp.fertile]
    slot = {id(z): i for i, z in zip(itertools.count(), decomp.fertile)}

    def work(zone: Zone) -> TilingLattice:
        if zone.kind == "frozen":
            return build_lattice([minimal_tiling(zone.domain)])
        return enumerate_zone(
            zone.domain,
            progress_cb if options.jobs <= 1 else None,
            seed_sink=options.seed_sink,
            sizes=sizes[slot[id(zone)]],
        )

    if options.jobs > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=options.jobs) as ex:
            lattices = list(ex.map(work, decomp.zones))
    else:
        lattices = [work(z) for z in decomp.zones]

    stats.generation_sizes = sizes
    return list(zip(decomp.zones, lattices))


def enumerate_domain(
    D: Domain,
    options: Optional[EnumerateOptions] = None,
    progress_cb: Optional[ProgressCb] = None,
) -> EnumerationResult:
    options = options or EnumerateOptions()
    stats = EnumerationStats()
    zones = _zone_lattices(D, options, progress_cb, stats)
    full = product([lat for _, lat in zones], D)
    stats.emitted = len(full)
    logger.info("%d tilings over %d zones", stats.emitted, stats.zones)
    return EnumerationResult(D, tuple(zones), full, stats)


def stream_tilings(
    D: Domain,
    sink: TilingSink,
    options: Optional[EnumerateOptions] = None,
    progress_cb: Optional[ProgressCb] = None,
) -> EnumerationStats:
    """Hand every tiling of D to sink, walking the zone product lazily."""
    options = options or EnumerateOptions()
    stats = EnumerationStats()
    zones = _zone_lattices(D, options, progress_cb, stats)
    stitcher = Stitcher(D, [z.domain for z, _ in zones])

    seen: set[bytes] = set()
    for parts in itertools.product(*(lat.nodes for _, lat in zones)):
        values = stitcher.values(parts)
        b = values.tobytes()
        if b in seen:
            stats.duplicates += 1
            continue
        seen.add(b)
        sink(tiling_from_height(D, values))
        stats.emitted += 1
    return stats


enumerate = enumerate_domain  # noqa: A001
