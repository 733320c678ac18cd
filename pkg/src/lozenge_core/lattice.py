# the distributive lattice of tilings: covers, inf/sup, intervals, products
# src/lozenge_core/lattice.py

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import networkx as nx
import numpy as np

from .domain import Domain
from .heights import compare, distance, pointwise_max, pointwise_min, tiling_from_height
from .io import DomainMismatch, NotComparable, NotFlipClosed
from .tiling import Tiling, extrema_mask, minimal_tiling

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TilingLattice:
    domain: Domain
    nodes: tuple[Tiling, ...]  # sorted by canonical height vector
    covers: tuple[tuple[int, int], ...]  # (lower, upper), one up-flip apart
    bottom: int
    top: int

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, T: object) -> bool:
        return isinstance(T, Tiling) and T.domain == self.domain and T.key in self.position

    @cached_property
    def position(self) -> dict[tuple[int, ...], int]:
        return {t.key: i for i, t in enumerate(self.nodes)}

    @cached_property
    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.nodes)))
        g.add_edges_from(self.covers)
        return g

    def index_of(self, T: Tiling) -> int:
        try:
            return self.position[T.key]
        except KeyError:
            raise NotComparable(f"{T!r} is not a node of this lattice") from None

    def upper_covers(self, i: int) -> list[int]:
        return sorted(self.graph.successors(i))

    def lower_covers(self, i: int) -> list[int]:
        return sorted(self.graph.predecessors(i))

    def rank(self, i: int) -> int:
        return distance(self.nodes[self.bottom].heights, self.nodes[i].heights) // 3


def _assemble(domain: Domain, nodes: Sequence[Tiling], covers: Iterable[tuple[int, int]]) -> TilingLattice:
    covers = sorted(set(covers))
    lower = {j for _, j in covers}
    upper = {i for i, _ in covers}
    bottoms = [i for i in range(len(nodes)) if i not in lower]
    tops = [i for i in range(len(nodes)) if i not in upper]
    if len(bottoms) != 1 or len(tops) != 1:
        raise NotFlipClosed(f"Expected one bottom and one top, got {len(bottoms)} and {len(tops)}")
    return TilingLattice(domain, tuple(nodes), tuple(covers), bottoms[0], tops[0])


def build_lattice(tilings: Iterable[Tiling]) -> TilingLattice:
    """Cover graph of a flip-closed set of tilings of one domain."""
    unique: dict[tuple[int, ...], Tiling] = {}
    domain: Optional[Domain] = None
    for t in tilings:
        if domain is None:
            domain = t.domain
        elif t.domain != domain:
            raise DomainMismatch("Tilings of different domains")
        unique.setdefault(t.key, t)
    if domain is None:
        raise NotFlipClosed("Empty set of tilings")

    nodes = sorted(unique.values(), key=lambda t: t.key)
    position = {t.key: i for i, t in enumerate(nodes)}
    interior = domain.index.interior

    covers = []
    for i, t in enumerate(nodes):
        values = t.heights.values
        for v in np.flatnonzero(extrema_mask(domain, values, "min")):
            up = values.copy()
            up[v] += 3
            j = position.get(tuple(int(x) for x in up[interior]))
            if j is None:
                raise NotFlipClosed(f"Up-flip at {domain.index.order[v]} leaves the set")
            covers.append((i, j))

    lat = _assemble(domain, nodes, covers)
    logger.debug("lattice of %d tilings, %d covers", len(lat.nodes), len(lat.covers))
    return lat


def inf(T1: Tiling, T2: Tiling) -> Tiling:
    if T1.domain != T2.domain:
        raise DomainMismatch("inf of tilings of different domains")
    return tiling_from_height(T1.domain, pointwise_min(T1.heights, T2.heights))


def sup(T1: Tiling, T2: Tiling) -> Tiling:
    if T1.domain != T2.domain:
        raise DomainMismatch("sup of tilings of different domains")
    return tiling_from_height(T1.domain, pointwise_max(T1.heights, T2.heights))


def interval(L: TilingLattice, a: Tiling, b: Tiling) -> TilingLattice:
    if compare(a.heights, b.heights) not in ("less", "equal"):
        raise NotComparable("Interval bounds are not ordered")
    lo, hi = a.heights.values, b.heights.values
    keep = [i for i, t in enumerate(L.nodes) if np.all(lo <= t.heights.values) and np.all(t.heights.values <= hi)]
    remap = {old: new for new, old in enumerate(keep)}
    covers = [(remap[i], remap[j]) for i, j in L.covers if i in remap and j in remap]
    return _assemble(L.domain, [L.nodes[i] for i in keep], covers)


class Stitcher:
    """Writes zone height vectors into a full-domain vector over the minimal tiling."""

    def __init__(self, domain: Domain, zones: Sequence[Domain]):
        self.domain = domain
        self.base = minimal_tiling(domain).heights.values
        pos = domain.index.position
        self.slots = []
        for z in zones:
            idx = np.array([pos[v] for v in z.index.order], dtype=np.int64)
            self.slots.append((idx, int(self.base[pos[z.start]])))

    def values(self, parts: Sequence[Tiling]) -> np.ndarray:
        out = self.base.copy()
        for (idx, offset), t in zip(self.slots, parts):
            out[idx] = t.heights.values + offset
        return out

    def tiling(self, parts: Sequence[Tiling]) -> Tiling:
        return tiling_from_height(self.domain, self.values(parts))


def stitch(domain: Domain, parts: Sequence[Tiling]) -> Tiling:
    """Full-domain tiling made of the given zone tilings, minimal elsewhere."""
    return Stitcher(domain, [t.domain for t in parts]).tiling(parts)


def product(lattices: Sequence[TilingLattice], domain: Domain) -> TilingLattice:
    """Lattice of the domain built from independent zone lattices."""
    stitcher = Stitcher(domain, [L.domain for L in lattices])
    sizes = [len(L) for L in lattices]
    combos = list(itertools.product(*(range(n) for n in sizes)))
    where = {c: i for i, c in enumerate(combos)}

    tilings = [stitcher.tiling([L.nodes[k] for L, k in zip(lattices, c)]) for c in combos]

    uppers = [{i: L.upper_covers(i) for i in range(len(L))} for L in lattices]
    covers = []
    for c in combos:
        for z, k in enumerate(c):
            for j in uppers[z][k]:
                covers.append((where[c], where[c[:z] + (j,) + c[z + 1:]]))

    order = sorted(range(len(tilings)), key=lambda i: tilings[i].key)
    remap = {old: new for new, old in enumerate(order)}
    lat = _assemble(
        domain,
        [tilings[i] for i in order],
        [(remap[i], remap[j]) for i, j in covers],
    )
    logger.debug("product of %d zone lattices: %d tilings", len(lattices), len(lat.nodes))
    return lat


def sup_irreducibles(L: TilingLattice) -> list[Tiling]:
    """Nodes with exactly one lower cover."""
    g = L.graph
    return [L.nodes[i] for i in range(len(L)) if g.in_degree(i) == 1]


def to_dot(L: TilingLattice, *, ranks: bool = True) -> str:
    lines = ["digraph tilings {", "  rankdir=BT;", "  node [shape=circle fontname=Arial];"]
    append = lines.append
    for i in range(len(L)):
        label = f"{i}\\nr={L.rank(i)}" if ranks else str(i)
        append(f'  n{i} [label="{label}"];')
    for i, j in L.covers:
        append(f"  n{i} -> n{j};")
    append("}")
    return "\n".join(lines) + "\n"
