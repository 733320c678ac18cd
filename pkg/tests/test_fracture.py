from __future__ import annotations

import logging
import math

import numpy as np
import pytest

from lozenge_core.domain import Domain, hexagon
from lozenge_core.enumerator import enumerate_domain
from lozenge_core.fracture import fracture_zones, solid_vertices
from lozenge_core.grid import D, U, Vertex, triangles_at
from lozenge_core.tiling import minimal_tiling, oracle_all_tilings

from conftest import SMALL_DOMAINS


def test_dumbbell_zones(dumbbell, caplog):
    with caplog.at_level(logging.WARNING, logger="lozenge_core.fracture"):
        decomp = fracture_zones(dumbbell)
    assert len(decomp.fertile) == 2
    assert len(decomp.frozen) == 2
    assert dumbbell.vertices - decomp.solid == {Vertex(0, 0), Vertex(2, 0)}
    assert any("touch" in r.getMessage() for r in caplog.records)
    for z in decomp.fertile:
        assert len(z.triangles) == 6
    for z in decomp.frozen:
        assert z.lozenge is not None
        assert z.lozenge in minimal_tiling(dumbbell).lozenges


def test_unit_lozenge_is_frozen(unit_lozenge):
    decomp = fracture_zones(unit_lozenge)
    assert decomp.fertile == ()
    assert len(decomp.frozen) == 1
    assert solid_vertices(unit_lozenge) == unit_lozenge.vertices


def test_box_is_one_zone():
    dom = hexagon(2, 2, 2)
    decomp = fracture_zones(dom)
    assert len(decomp.zones) == 1
    (zone,) = decomp.zones
    assert zone.kind == "fertile"
    assert zone.domain == dom
    assert decomp.solid == dom.boundary_set


@pytest.mark.parametrize("make,_", SMALL_DOMAINS)
def test_zones_partition_the_domain(make, _):
    dom = make()
    decomp = fracture_zones(dom)
    seen = set()
    for z in decomp.zones:
        assert not (seen & z.triangles)
        seen |= z.triangles
    assert seen == dom.triangles


@pytest.mark.parametrize("make,count", SMALL_DOMAINS)
def test_zone_counts_multiply(make, count):
    dom = make()
    total = 1
    for z in fracture_zones(dom).fertile:
        total *= len(oracle_all_tilings(z.domain))
    assert total == count


@pytest.mark.parametrize("make,_", SMALL_DOMAINS)
def test_frozen_lozenges_are_in_every_tiling(make, _):
    dom = make()
    frozen = {z.lozenge for z in fracture_zones(dom).frozen}
    for T in oracle_all_tilings(dom):
        assert frozen <= T.lozenges


@pytest.mark.parametrize("make,_", SMALL_DOMAINS)
def test_solid_vertices_never_move(make, _):
    dom = make()
    solid = solid_vertices(dom)
    assert dom.boundary_set <= solid
    lo = minimal_tiling(dom).heights
    for T in oracle_all_tilings(dom):
        for v in solid:
            assert T.heights[v] == lo[v]


def _hexagon_chain(*centres) -> Domain:
    return Domain.from_triangles({t for c in centres for t in triangles_at(Vertex(*c))})


def test_hexagons_sharing_an_edge_split(caplog):
    dom = _hexagon_chain((0, 0), (2, 1))
    with caplog.at_level(logging.WARNING, logger="lozenge_core.fracture"):
        decomp = fracture_zones(dom)
    assert dom.vertices - decomp.solid == {Vertex(0, 0), Vertex(2, 1)}
    assert decomp.frozen == ()
    assert [len(z.triangles) for z in decomp.fertile] == [6, 6]
    assert {z.domain for z in decomp.fertile} == {
        Domain.from_triangles(triangles_at(Vertex(0, 0))),
        Domain.from_triangles(triangles_at(Vertex(2, 1))),
    }
    assert any("touch" in r.getMessage() for r in caplog.records)
    assert len(oracle_all_tilings(dom)) == 4


def test_hexagon_chain_splits_into_three():
    dom = _hexagon_chain((0, 0), (2, 1), (4, 2))
    decomp = fracture_zones(dom)
    assert [len(z.triangles) for z in decomp.fertile] == [6, 6, 6]
    result = enumerate_domain(dom)
    assert result.stats.fertile_zones == 3
    assert len(result.full) == 8
    assert [t.key for t in result.full.nodes] == [t.key for t in oracle_all_tilings(dom)]


def _composite(links) -> Domain:
    """Unit hexagons left to right: 'edge' shares a side with the next one,
    'strip' joins it through two forced lozenges as in the dumbbell."""
    p, q = 0, 0
    tris = set(triangles_at(Vertex(p, q)))
    for link in links:
        if link == "strip":
            tris |= {D(p + 1, q), U(p + 1, q + 1), U(p, q - 1), D(p, q - 2)}
            p += 2
        else:
            p, q = p + 2, q + 1
        tris |= set(triangles_at(Vertex(p, q)))
    return Domain.from_triangles(tris)


@pytest.mark.parametrize("seed", range(10))
def test_random_frozen_strip_composites(seed):
    rng = np.random.default_rng(seed)
    links = [str(x) for x in rng.choice(["edge", "strip"], size=int(rng.integers(1, 5)))]
    dom = _composite(links)
    tilings = oracle_all_tilings(dom)
    decomp = fracture_zones(dom)

    assert len(tilings) == 2 ** (len(links) + 1)
    assert len(decomp.fertile) == len(links) + 1
    assert len(decomp.frozen) == 2 * links.count("strip")
    assert math.prod(len(oracle_all_tilings(z.domain)) for z in decomp.fertile) == len(tilings)
    frozen = {z.lozenge for z in decomp.frozen}
    for T in tilings:
        assert frozen <= T.lozenges
    assert len(enumerate_domain(dom).full) == len(tilings)
