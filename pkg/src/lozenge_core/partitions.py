# bounded partitions and plane partitions, streamed
# src/lozenge_core/partitions.py

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence, Union

from .io import NotAPartition, NotAPlanePartition, OutOfRange

Partition = tuple[int, ...]
PlanePartition = tuple[Partition, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate a non-increasing sequence of non-negative integers."""
    out = tuple(int(x) for x in parts)
    for i, x in enumerate(out):
        if x < 0:
            raise NotAPartition(f"Negative part {x} in {out}")
        if i and x > out[i - 1]:
            raise NotAPartition(f"Parts must be non-increasing: {out}")
    return out


def as_plane_partition(rows: Iterable[Iterable[int]]) -> PlanePartition:
    raw = [tuple(int(x) for x in row) for row in rows]
    width = max((len(r) for r in raw), default=0)
    out = []
    for r in raw:
        padded = r + (0,) * (width - len(r))
        try:
            out.append(as_partition(padded))
        except NotAPartition as e:
            raise NotAPlanePartition(f"Row {padded} is not a partition ({e})") from e
    for i in range(1, len(out)):
        for j in range(width):
            if out[i][j] > out[i - 1][j]:
                raise NotAPlanePartition(f"Column {j} increases between rows {i - 1} and {i}")
    return tuple(out)


def weight(x: Union[Sequence[int], Sequence[Sequence[int]]]) -> int:
    total = 0
    for item in x:
        total += sum(item) if isinstance(item, (tuple, list)) else int(item)
    return total


def meet(a: Sequence[int], b: Sequence[int]) -> Partition:
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return tuple(min(x, y) for x, y in zip(a, b))


def conjugate(p: Sequence[int]) -> Partition:
    p = as_partition(p)
    top = p[0] if p else 0
    return tuple(sum(1 for x in p if x > i) for i in range(top))


def _loop(t: int, prefix: Partition, bounds: Partition, cap: float, prune: bool) -> Iterator[Partition]:
    if t == 0:
        yield prefix + (0,) * len(bounds)
        return
    if len(bounds) == 1:
        if t <= min(bounds[0], cap):
            yield prefix + (t,)
        return

    hi = int(min(bounds[0], t, cap))
    rest = bounds[1:]
    if prune:
        # smallest first part that can still reach t
        lo = next((j for j in range(1, hi + 1) if j + sum(min(b, j) for b in rest) >= t), None)
        if lo is None:
            return
    else:
        lo = 1
    for k in range(hi, lo - 1, -1):
        yield from _loop(t - k, prefix + (k,), rest, k, prune)


def limited_partitions(s: int, p: Sequence[int], prune: bool = True) -> Iterator[Partition]:
    """All a <= p (part-wise) of weight s, largest first part first."""
    p = as_partition(p)
    if s < 0 or s > weight(p):
        raise OutOfRange(f"Weight {s} outside 0..{weight(p)} for {p}")
    if not p:
        yield ()
        return
    yield from _loop(s, (), p, math.inf, prune)


def _slices(t: int, bounds: PlanePartition, prune: bool) -> Iterator[PlanePartition]:
    head, rest = bounds[0], bounds[1:]
    if not rest:
        if t <= weight(head):
            for k in limited_partitions(t, head):
                yield (k,)
        return

    for u in range(min(t, weight(head)), -1, -1):
        for k in limited_partitions(u, head):
            below = tuple(meet(k, b) for b in rest)
            if prune and u + sum(weight(b) for b in below) < t:
                continue
            for tail in _slices(t - u, below, prune):
                yield (k,) + tail


def limited_plane_partitions(s: int, P: Sequence[Sequence[int]], prune: bool = True) -> Iterator[PlanePartition]:
    """All plane partitions A <= P of weight s, each exactly once."""
    P = as_plane_partition(P)
    if s < 0 or s > weight(P):
        raise OutOfRange(f"Weight {s} outside 0..{weight(P)}")
    if not P:
        yield ()
        return
    yield from _slices(s, P, prune)


def all_limited_plane_partitions(P: Sequence[Sequence[int]]) -> Iterator[PlanePartition]:
    P = as_plane_partition(P)
    for s in range(weight(P) + 1):
        yield from limited_plane_partitions(s, P)
