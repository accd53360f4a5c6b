"""Deterministic SVG rendering of regions and tilings.

Each cell is drawn as a unit-circumradius hexagon (corners at the six sixth
roots of unity around the center) with screen y equal to minus the imaginary
part, so pictures appear in the usual orientation.  All geometry comes from
exact integers times 1/2 and sqrt(3)/2 and is printed with fixed 4-decimal
formatting, so output is byte-stable: the same scene always yields the same
file.  The palette and stroke widths below are fixed constants and are part
of the golden-test interface.
"""

from __future__ import annotations

from typing import Iterable

from .grid import Cell, Region, _hexagon_vertices
from .tiles import Prototile
from .engine import Tiling

# Fill colors: the two stones and the three bones are always distinguishable.
PALETTE: dict[Prototile, str] = {
    Prototile.RIGHT_STONE: "#d95f02",
    Prototile.LEFT_STONE: "#7570b3",
    Prototile.VERTICAL_BONE: "#1b9e77",
    Prototile.RISING_BONE: "#e7298a",
    Prototile.FALLING_BONE: "#66a61e",
}
REGION_FILL = "#cccccc"
CELL_STROKE = "#000000"
CELL_STROKE_WIDTH = 0.06
HEX_STROKE_WIDTH = 0.1
MARGIN = 0.35

_ROOT3_HALF = (3 ** 0.5) / 2
# The six corner offsets (cos, sin) at angles 0, 60, ..., 300 degrees,
# written exactly so no trig call can wobble the last digit.
_CORNERS = ((1.0, 0.0), (0.5, _ROOT3_HALF), (-0.5, _ROOT3_HALF),
            (-1.0, 0.0), (-0.5, -_ROOT3_HALF), (0.5, -_ROOT3_HALF))


def _center(c: Cell) -> tuple[float, float]:
    # Cartesian center of i + j*w + k*w^2, y still pointing up.
    return c.i - (c.j + c.k) / 2, (c.j - c.k) * _ROOT3_HALF


def _fmt(v: float) -> str:
    out = f"{v:.4f}"
    return "0.0000" if out == "-0.0000" else out


def _cell_points(c: Cell) -> str:
    cx, cy = _center(c)
    return " ".join(f"{_fmt(cx + dx)},{_fmt(-(cy + dy))}"
                    for dx, dy in _CORNERS)


def _bounds(cells: Iterable[Cell],
            extra: Iterable[tuple[float, float]] = ()) -> tuple:
    xs, ys = [], []
    for c in cells:
        cx, cy = _center(c)
        xs.extend((cx - 1, cx + 1))
        ys.extend((-cy - 1, -cy + 1))
    for x, y in extra:
        xs.append(x)
        ys.append(y)
    lo_x, hi_x = min(xs) - MARGIN, max(xs) + MARGIN
    lo_y, hi_y = min(ys) - MARGIN, max(ys) + MARGIN
    return lo_x, lo_y, hi_x - lo_x, hi_y - lo_y


def _svg(view: tuple, body: list[str]) -> str:
    header = ('<svg xmlns="http://www.w3.org/2000/svg" viewBox="'
              + " ".join(_fmt(v) for v in view) + '">')
    return "\n".join([header, *body, "</svg>"]) + "\n"


def region_svg(region: Region) -> str:
    """The region's cells in a neutral fill, plus the enclosing hexagon
    outline when the region is a benzel."""
    cells = region.sorted_cells
    extra = []
    outline = None
    if region.kind == "benzel":
        a, b = region.params
        pts = []
        for x, y in _hexagon_vertices(a, b):
            px, py = x - y / 2, y * _ROOT3_HALF
            pts.append((px, -py))
        extra = pts
        outline = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
    body = [f'<g stroke="{CELL_STROKE}" stroke-width="{CELL_STROKE_WIDTH}" '
            f'stroke-linejoin="round">']
    for c in cells:
        body.append(f'<polygon points="{_cell_points(c)}" '
                    f'fill="{REGION_FILL}"/>')
    body.append("</g>")
    if outline:
        body.append(f'<polygon points="{outline}" fill="none" '
                    f'stroke="{CELL_STROKE}" '
                    f'stroke-width="{HEX_STROKE_WIDTH}"/>')
    return _svg(_bounds(cells, extra), body)


def tiling_svg(tiling: Tiling) -> str:
    """One tiling, each cell filled with its tile kind's palette color."""
    placements = sorted(tiling.placements, key=lambda p: p.sort_key())
    body = [f'<g stroke="{CELL_STROKE}" stroke-width="{CELL_STROKE_WIDTH}" '
            f'stroke-linejoin="round">']
    all_cells = []
    for p in placements:
        fill = PALETTE[p.kind]
        for c in p.cells():
            all_cells.append(c)
            body.append(f'<polygon points="{_cell_points(c)}" '
                        f'fill="{fill}"/>')
    body.append("</g>")
    return _svg(_bounds(all_cells), body)
