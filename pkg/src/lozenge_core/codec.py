# JSON shapes for vertices, lozenges, domains, tilings, zones and seed records
# src/lozenge_core/codec.py

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from .domain import Domain, enclose, parse_contour, trace
from .fracture import Zone
from .grid import Lozenge, Triangle, Vertex
from .heights import HeightFunction, tiling_from_height
from .io import InputError, load_json
from .seeds import SeedRecord
from .tiling import Tiling


def vertex_to_json(v: Vertex) -> list[int]:
    return [int(v.p), int(v.q)]


def vertex_from_json(obj: Any) -> Vertex:
    try:
        p, q = obj
        return Vertex(int(p), int(q))
    except (TypeError, ValueError) as e:
        raise InputError(f"Bad vertex {obj!r} ({e})") from e


def parse_vertex(text: str) -> Vertex:
    """'p,q' -> Vertex."""
    try:
        p, q = (int(x) for x in text.split(","))
    except ValueError as e:
        raise InputError(f"Expected p,q but got {text!r}") from e
    return Vertex(p, q)


def lozenge_to_json(l: Lozenge) -> dict:
    return {"d": l.diagonal, "anchor": vertex_to_json(l.anchor)}


def lozenge_from_json(obj: Any) -> Lozenge:
    try:
        d = obj["d"]
        anchor = obj["anchor"]
    except (KeyError, TypeError) as e:
        raise InputError(f"Bad lozenge {obj!r} ({e})") from e
    if d not in ("a", "b", "c"):
        raise InputError(f"Bad lozenge diagonal {d!r}")
    return Lozenge(d, vertex_from_json(anchor))


def triangle_to_json(t: Triangle) -> dict:
    return {"o": t.orientation, "anchor": vertex_to_json(t.anchor)}


def domain_to_json(D: Domain, *, triangles: bool = True) -> dict:
    out: dict[str, Any] = {"contour": str(D.contour), "start": vertex_to_json(D.start)}
    if triangles:
        out["triangles"] = [triangle_to_json(t) for t in sorted(D.triangles)]
    return out


def domain_from_json(obj: Any) -> Domain:
    try:
        contour = obj["contour"]
    except (KeyError, TypeError) as e:
        raise InputError(f"Domain JSON needs a 'contour' field ({e})") from e
    start = vertex_from_json(obj.get("start", [0, 0]))
    return enclose(trace(parse_contour(contour), start))


def load_domain(path: Path) -> Domain:
    return domain_from_json(load_json(path))


def heights_to_json(h: HeightFunction) -> dict[str, int]:
    return {json.dumps(vertex_to_json(v), separators=(",", ":")): hv for v, hv in h.as_dict().items()}


def heights_from_json(D: Domain, obj: dict) -> HeightFunction:
    pos = D.index.position
    values = np.zeros(len(pos), dtype=np.int64)
    seen = set()
    for k, hv in obj.items():
        v = vertex_from_json(json.loads(k))
        if v not in pos:
            raise InputError(f"Vertex {tuple(v)} is not in the domain")
        values[pos[v]] = int(hv)
        seen.add(v)
    if len(seen) != len(pos):
        raise InputError(f"Height map covers {len(seen)} of {len(pos)} vertices")
    return HeightFunction(D, values)


def tiling_to_json(T: Tiling, *, heights: bool = False) -> dict:
    out: dict[str, Any] = {"lozenges": [lozenge_to_json(l) for l in T.sorted_lozenges()]}
    if heights:
        out["heights"] = heights_to_json(T.heights)
    return out


def tiling_from_json(D: Domain, obj: Any) -> Tiling:
    if isinstance(obj, dict) and "lozenges" in obj:
        return Tiling(D, frozenset(lozenge_from_json(l) for l in obj["lozenges"]))
    if isinstance(obj, dict) and "heights" in obj:
        return tiling_from_height(D, heights_from_json(D, obj["heights"]))
    raise InputError("Tiling JSON needs 'lozenges' or 'heights'")


def zone_to_json(z: Zone) -> dict:
    out: dict[str, Any] = {
        "kind": z.kind,
        "triangles": len(z.triangles),
        "boundary": str(z.domain.contour),
        "start": vertex_to_json(z.domain.start),
    }
    if z.lozenge is not None:
        out["lozenge"] = lozenge_to_json(z.lozenge)
    return out


def seed_record_to_json(r: SeedRecord) -> dict:
    return {
        "center": vertex_to_json(r.seed.center),
        "order": r.order,
        "shape": [list(row) for row in r.shape],
        "cubes": len(r.max_pile),
        "range": len(r.max_range),
    }
