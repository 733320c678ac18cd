# shared fixture domains

from __future__ import annotations

import pytest

from lozenge_core.domain import Domain, enclose, hexagon, trace
from lozenge_core.grid import D, U

UNIT_LOZENGE = "abAB"
UNIT_HEXAGON = "aCbAcB"
BUTTERFLY = "bccaBCCA"


def dumbbell_domain() -> Domain:
    # unit hexagons around (0,0) and (2,0), joined by two forced lozenges
    left = [U(0, 0), D(0, 0), U(-1, 0), D(-1, -1), U(-1, -1), D(0, -1)]
    right = [U(2, 0), D(2, 0), U(1, 0), D(1, -1), U(1, -1), D(2, -1)]
    joins = [D(1, 0), U(1, 1), U(0, -1), D(0, -2)]
    return Domain.from_triangles(left + right + joins)


def notched_domain() -> Domain:
    box = hexagon(2, 1, 2)
    return Domain.from_triangles(box.triangles - {U(0, 0), D(0, 0)})


def staircase_domain() -> Domain:
    box = hexagon(3, 1, 3)
    cut = {U(0, 0), D(0, 0), U(0, 1), D(0, 1), U(1, 0), D(1, 0)}
    return Domain.from_triangles(box.triangles - cut)


@pytest.fixture
def unit_lozenge() -> Domain:
    return enclose(trace(UNIT_LOZENGE))


@pytest.fixture
def unit_hexagon() -> Domain:
    return hexagon(1, 1, 1)


@pytest.fixture
def butterfly() -> Domain:
    return enclose(trace(BUTTERFLY))


@pytest.fixture
def dumbbell() -> Domain:
    return dumbbell_domain()


@pytest.fixture
def notched() -> Domain:
    return notched_domain()


@pytest.fixture
def staircase() -> Domain:
    return staircase_domain()


# (domain factory, number of tilings)
SMALL_DOMAINS = [
    (lambda: hexagon(1, 1, 1), 2),
    (lambda: hexagon(2, 1, 1), 3),
    (lambda: hexagon(2, 2, 1), 6),
    (lambda: hexagon(2, 2, 2), 20),
    (dumbbell_domain, 4),
    (notched_domain, 5),
    (staircase_domain, 14),
]
