# solid vertices and the split of a domain into fertile zones and frozen lozenges
# src/lozenge_core/fracture.py

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal, Optional

import networkx as nx
import numpy as np

from .domain import Domain
from .grid import (
    Lozenge,
    Triangle,
    Vertex,
    edge_triangles,
    lozenge_cells,
    lozenge_vertices,
    triangle_edges,
)
from .io import FractureError, SelfIntersecting
from .tiling import maximal_tiling, minimal_tiling

logger = logging.getLogger(__name__)

ZoneKind = Literal["fertile", "frozen"]


@dataclass(frozen=True)
class Zone:
    kind: ZoneKind
    domain: Domain
    lozenge: Optional[Lozenge] = None  # set for frozen zones

    @property
    def triangles(self):
        return self.domain.triangles

    @property
    def boundary(self) -> tuple[Vertex, ...]:
        return self.domain.boundary


@dataclass(frozen=True)
class ZoneDecomposition:
    domain: Domain
    zones: tuple[Zone, ...]
    solid: frozenset[Vertex]

    @property
    def fertile(self) -> tuple[Zone, ...]:
        return tuple(z for z in self.zones if z.kind == "fertile")

    @property
    def frozen(self) -> tuple[Zone, ...]:
        return tuple(z for z in self.zones if z.kind == "frozen")


def solid_vertices(D: Domain) -> frozenset[Vertex]:
    """Vertices with the same height in the minimal and maximal tilings."""
    lo = minimal_tiling(D).heights.values
    hi = maximal_tiling(D).heights.values
    order = D.index.order
    return frozenset(order[i] for i in np.flatnonzero(lo == hi))


def _across(t: Triangle, u: Vertex, w: Vertex) -> Triangle:
    t1, t2 = edge_triangles(u, w)
    return t2 if t1 == t else t1


def fracture_zones(D: Domain) -> ZoneDecomposition:
    tmin = minimal_tiling(D)
    solid = solid_vertices(D)

    zones: list[Zone] = []
    frozen_cells = set()
    for l in sorted(tmin.lozenges):
        if all(v in solid for v in lozenge_vertices(l)):
            cells = lozenge_cells(l)
            frozen_cells.update(cells)
            zones.append(Zone("frozen", Domain.from_triangles(cells), l))

    rest = D.triangles - frozen_cells
    g = nx.Graph()
    g.add_nodes_from(rest)
    for t in rest:
        for u, w in triangle_edges(t):
            n = _across(t, u, w)
            # an edge between two solid vertices is a fracture line
            if n in rest and not (u in solid and w in solid):
                g.add_edge(t, n)

    fertile: list[Zone] = []
    for comp in nx.connected_components(g):
        try:
            zd = Domain.from_triangles(comp)
        except SelfIntersecting as e:
            raise FractureError(f"Zone of {len(comp)} triangles is not simply bounded ({e})") from e
        if all(v in solid for v in zd.interior_vertices):
            raise FractureError(f"Zone of {len(comp)} triangles has no free interior vertex")
        fertile.append(Zone("fertile", zd))

    # two fertile zones may meet at a single solid vertex; they stay separate
    for i, a in enumerate(fertile):
        for b in fertile[i + 1:]:
            shared = a.domain.vertices & b.domain.vertices
            if shared:
                logger.warning(
                    "fertile zones touch at %s; kept as separate zones",
                    ", ".join(str(tuple(v)) for v in sorted(shared)),
                )

    zones.extend(fertile)
    zones.sort(key=lambda z: min(z.triangles))
    logger.debug(
        "fracture of %r: %d fertile, %d frozen, %d solid vertices",
        D, len(fertile), len(zones) - len(fertile), len(solid),
    )
    return ZoneDecomposition(D, tuple(zones), solid)
