# height functions: evaluation, boundary walk, tiling <-> height, order
# src/lozenge_core/heights.py

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Literal, Union

import numpy as np

from .domain import ContourWord, Domain, parse_contour
from .grid import Lozenge, Vertex, edge_sign, lozenge_vertices
from .io import DomainMismatch, InconsistentHeights, NotAHeightFunction, NotATiling

if TYPE_CHECKING:
    from .tiling import Tiling

logger = logging.getLogger(__name__)

Comparison = Literal["less", "equal", "greater", "incomparable"]

_DIAGONAL_LETTER = {(1, 0): "a", (0, 1): "b", (-1, -1): "c"}


@dataclass(frozen=True, eq=False)
class HeightFunction:
    domain: Domain
    values: np.ndarray  # int64, indexed like domain.index.order

    def __post_init__(self) -> None:
        arr = np.array(self.values, dtype=np.int64)
        if arr.shape != (len(self.domain.index.order),):
            raise NotAHeightFunction(
                f"Expected {len(self.domain.index.order)} values, got shape {arr.shape}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @cached_property
    def key(self) -> tuple[int, ...]:
        """Interior heights in vertex order: the canonical identity of a tiling."""
        return tuple(int(x) for x in self.values[self.domain.index.interior])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeightFunction):
            return NotImplemented
        return self.domain == other.domain and self.key == other.key

    def __hash__(self) -> int:
        return hash((self.domain, self.key))

    def __getitem__(self, v: Vertex) -> int:
        return int(self.values[self.domain.index.position[Vertex(*v)]])

    def as_dict(self) -> dict[Vertex, int]:
        return {v: int(h) for v, h in zip(self.domain.index.order, self.values)}


def evaluate(w: Union[ContourWord, str]) -> int:
    if isinstance(w, str):
        if not w.strip():
            return 0
        w = parse_contour(w)
    return sum(d.sign for d in w)


def boundary_heights(D: Domain) -> dict[Vertex, int]:
    """Heights along the boundary walk from D.start (which gets 0)."""
    b = D.boundary
    heights = {b[0]: 0}
    h = 0
    for i in range(len(b)):
        u, w = b[i], b[(i + 1) % len(b)]
        h += edge_sign(u, w)
        if w in heights and heights[w] != h:
            raise InconsistentHeights(
                f"Boundary vertex {tuple(w)} reached with heights {heights[w]} and {h}"
            )
        heights[w] = h

    # chords between boundary vertices must be legal steps too
    idx = D.index
    order = idx.order
    for t, hd in idx.edges:
        u, w = order[t], order[hd]
        if u in heights and w in heights:
            diff = heights[w] - heights[u]
            if diff not in (1, -2):
                raise InconsistentHeights(
                    f"Boundary heights {heights[u]} at {tuple(u)} and {heights[w]} at {tuple(w)} "
                    f"cannot be joined by an edge"
                )
    return heights


def _boundary_array(D: Domain) -> tuple[np.ndarray, np.ndarray]:
    bh = boundary_heights(D)
    pos = D.index.position
    idx = np.array([pos[v] for v in bh], dtype=np.int64)
    vals = np.array(list(bh.values()), dtype=np.int64)
    return idx, vals


def is_height_function(D: Domain, values: np.ndarray) -> bool:
    values = np.asarray(values, dtype=np.int64)
    idx = D.index
    if values.shape != (len(idx.order),):
        return False
    if values[idx.start] != 0:
        return False
    diffs = values[idx.edges[:, 1]] - values[idx.edges[:, 0]]
    if not np.all((diffs == 1) | (diffs == -2)):
        return False
    try:
        b_idx, b_vals = _boundary_array(D)
    except InconsistentHeights:
        return False
    return bool(np.array_equal(values[b_idx], b_vals))


def height_from_tiling(D: Domain, T: "Tiling") -> HeightFunction:
    from .tiling import validate

    if not validate(D, T):
        raise NotATiling(f"Lozenge set does not tile {D!r}")

    adj: dict[Vertex, list[tuple[Vertex, int]]] = {}
    for l in T.lozenges:
        corners = lozenge_vertices(l)
        for i in range(4):
            u, w = corners[i], corners[(i + 1) % 4]
            s = edge_sign(u, w)
            adj.setdefault(u, []).append((w, s))
            adj.setdefault(w, []).append((u, -s))

    heights = {D.start: 0}
    queue = deque([D.start])
    while queue:
        u = queue.popleft()
        for w, s in adj.get(u, ()):
            if w not in heights:
                heights[w] = heights[u] + s
                queue.append(w)

    order = D.index.order
    if len(heights) != len(order):
        raise NotATiling("Lozenge sides do not connect every vertex")
    return HeightFunction(D, np.array([heights[v] for v in order], dtype=np.int64))


def tiling_from_height(D: Domain, h: Union[HeightFunction, np.ndarray]) -> "Tiling":
    from .tiling import Tiling

    values = h.values if isinstance(h, HeightFunction) else np.asarray(h, dtype=np.int64)
    if isinstance(h, HeightFunction) and h.domain != D:
        raise DomainMismatch("Height function belongs to another domain")
    if not is_height_function(D, values):
        raise NotAHeightFunction(f"Values are not a height function on {D!r}")

    idx = D.index
    order = idx.order
    diffs = values[idx.edges[:, 1]] - values[idx.edges[:, 0]]
    lozenges = []
    for t, hd in idx.edges[diffs == -2]:
        u, w = order[t], order[hd]
        letter = _DIAGONAL_LETTER[(w.p - u.p, w.q - u.q)]
        lozenges.append(Lozenge(letter, min(u, w)))  # type: ignore[arg-type]
    return Tiling(D, frozenset(lozenges))


def _same_domain(h1: HeightFunction, h2: HeightFunction) -> Domain:
    if h1.domain != h2.domain:
        raise DomainMismatch(f"{h1.domain!r} vs {h2.domain!r}")
    return h1.domain


def compare(h1: HeightFunction, h2: HeightFunction) -> Comparison:
    _same_domain(h1, h2)
    le = bool(np.all(h1.values <= h2.values))
    ge = bool(np.all(h1.values >= h2.values))
    if le and ge:
        return "equal"
    if le:
        return "less"
    if ge:
        return "greater"
    return "incomparable"


def pointwise_min(h1: HeightFunction, h2: HeightFunction) -> HeightFunction:
    D = _same_domain(h1, h2)
    out = np.minimum(h1.values, h2.values)
    if not is_height_function(D, out):
        raise NotAHeightFunction("Pointwise minimum is not a height function")
    return HeightFunction(D, out)


def pointwise_max(h1: HeightFunction, h2: HeightFunction) -> HeightFunction:
    D = _same_domain(h1, h2)
    out = np.maximum(h1.values, h2.values)
    if not is_height_function(D, out):
        raise NotAHeightFunction("Pointwise maximum is not a height function")
    return HeightFunction(D, out)


def distance(h1: HeightFunction, h2: HeightFunction) -> int:
    _same_domain(h1, h2)
    return int(np.abs(h1.values - h2.values).sum())
