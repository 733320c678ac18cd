# static renderings of a tiling: SVG, ASCII, PNG
# src/lozenge_app/render.py

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from typing import Literal

from PIL import Image, ImageColor, ImageDraw

from lozenge_core.grid import Vertex, lozenge_cells, lozenge_vertices
from lozenge_core.io import BadPalette, InputError
from lozenge_core.tiling import Tiling

RenderFormat = Literal["svg", "ascii", "png"]

SQRT3_2 = math.sqrt(3) / 2
ASCII_CHARS = {"a": "\\", "b": "/", "c": "_"}


@dataclass(frozen=True)
class RenderSpec:
    format: RenderFormat = "svg"
    scale: int = 24  # pixels per unit edge
    palette: tuple[str, str, str] = ("#f2c14e", "#5b8bd9", "#7cc47f")  # a, b, c diagonals
    margin: int = 4

    def __post_init__(self) -> None:
        if self.format not in ("svg", "ascii", "png"):
            raise InputError(f"Unknown render format: {self.format}")
        if self.scale < 1:
            raise InputError(f"Scale must be >= 1, got {self.scale}")
        if len(self.palette) != 3:
            raise BadPalette(f"Palette needs three colors, got {len(self.palette)}")
        try:
            rgb = [ImageColor.getrgb(c) for c in self.palette]
        except ValueError as e:
            raise BadPalette(f"Unreadable color in palette {self.palette} ({e})") from e
        if len(set(rgb)) != 3:
            raise BadPalette(f"Palette colors must be distinct: {self.palette}")

    def color(self, letter: str) -> str:
        return self.palette["abc".index(letter)]


def _plane(v: Vertex, scale: int) -> tuple[float, float]:
    return (v.p - v.q / 2) * scale, -v.q * SQRT3_2 * scale


def _frame(T: Tiling, spec: RenderSpec) -> tuple[float, float, int, int]:
    pts = [_plane(v, spec.scale) for v in T.domain.vertices]
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts]
    ox = spec.margin - min(xs)
    oy = spec.margin - min(ys)
    width = math.ceil(max(xs) - min(xs)) + 2 * spec.margin
    height = math.ceil(max(ys) - min(ys)) + 2 * spec.margin
    return ox, oy, width, height


def _polygons(T: Tiling, spec: RenderSpec):
    ox, oy, _, _ = _frame(T, spec)
    for l in T.sorted_lozenges():
        pts = []
        for v in lozenge_vertices(l):
            x, y = _plane(v, spec.scale)
            pts.append((x + ox, y + oy))
        yield l, pts


def render_svg(T: Tiling, spec: RenderSpec) -> bytes:
    _, _, width, height = _frame(T, spec)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for l, pts in _polygons(T, spec):
        coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in pts)
        lines.append(
            f'  <polygon class="{l.diagonal}" points="{coords}" fill="{spec.color(l.diagonal)}" '
            f'stroke="black" stroke-width="1"/>'
        )
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")


def render_ascii(T: Tiling) -> bytes:
    """One character per triangle, rows from top to bottom."""
    cells: dict[tuple[int, int], str] = {}
    for l in T.lozenges:
        for t in lozenge_cells(l):
            p, q = t.anchor
            col = 2 * p - q + (1 if t.orientation == "up" else 0)
            cells[(q, col)] = ASCII_CHARS[l.diagonal]

    rows = [q for q, _ in cells]
    cols = [c for _, c in cells]
    lo_col = min(cols)
    out = []
    for q in range(max(rows), min(rows) - 1, -1):
        line = "".join(cells.get((q, c), " ") for c in range(lo_col, max(cols) + 1))
        out.append(line.rstrip())
    return ("\n".join(out) + "\n").encode("utf-8")


def render_png(T: Tiling, spec: RenderSpec) -> bytes:
    _, _, width, height = _frame(T, spec)
    img = Image.new("RGB", (width, height), "white")
    draw = ImageDraw.Draw(img)
    for l, pts in _polygons(T, spec):
        draw.polygon(pts, fill=spec.color(l.diagonal), outline="black")
    buf = io.BytesIO()
    img.save(buf, format="PNG")
    return buf.getvalue()


def render(T: Tiling, spec: RenderSpec) -> bytes:
    if spec.format == "svg":
        return render_svg(T, spec)
    if spec.format == "ascii":
        return render_ascii(T)
    return render_png(T, spec)
