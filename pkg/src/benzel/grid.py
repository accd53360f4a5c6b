"""Cells and regions of the hexagonal grid.

A cell is addressed by an integer triple (i, j, k) with i + j + k = 1; its
center in the complex plane is i + j*w + k*w**2 where w = exp(2*pi*I/3).
Two cells are adjacent when their triples differ by a signed permutation
of (1, -1, 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple


class Cell(NamedTuple):
    i: int
    j: int
    k: int


class ParameterError(ValueError):
    """Raised for region parameters outside the supported range."""


# The six neighbor offsets, i.e. the signed permutations of (1, -1, 0).
NEIGHBOR_OFFSETS: tuple[tuple[int, int, int], ...] = (
    (0, 1, -1),
    (1, 0, -1),
    (1, -1, 0),
    (0, -1, 1),
    (-1, 0, 1),
    (-1, 1, 0),
)


@dataclass(frozen=True)
class Region:
    """An immutable finite set of cells plus construction metadata.

    ``kind`` is one of "benzel", "triangle" or "custom"; ``params`` holds the
    canonical (a, b) for benzels and (n,) for triangles.  ``requested`` keeps
    the parameters as given before canonicalization.
    """

    cells: frozenset[Cell]
    kind: str = "custom"
    params: tuple[int, ...] = ()
    requested: tuple[int, ...] = ()

    @cached_property
    def sorted_cells(self) -> tuple[Cell, ...]:
        """Cells in ascending lexicographic (i, j, k) order."""
        return tuple(sorted(self.cells))

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def key(self) -> tuple | None:
        """Stable identity used for cache lookups; None for custom regions."""
        if self.kind in ("benzel", "triangle"):
            return (self.kind, *self.params)
        return None


def canonical_params(a: int, b: int) -> tuple[int, int]:
    """Reduce benzel parameters to the canonical range a <= 2b, b <= 2a.

    The (a, b)-benzel coincides with the (a, a-b)-benzel when a > 2b and
    with the (b-a, b)-benzel when b > 2a, so parameters are folded until
    stable.  Raises ParameterError when the result leaves min(a, b) < 2.
    """
    if a < 1 or b < 1:
        raise ParameterError(f"benzel parameters must be positive, got "
                             f"({a}, {b})")
    while True:
        if a > 2 * b:
            a, b = a, a - b
        elif b > 2 * a:
            a, b = b - a, b
        else:
            break
    if a < 2 or b < 2:
        raise ParameterError(f"no valid benzel for parameters ({a}, {b})")
    return a, b


def _benzel_cells(a: int, b: int) -> frozenset[Cell]:
    # Walk the difference coordinates u = j-i, v = k-j; each pair with
    # 2u + v == 1 (mod 3) lifts to exactly one cell on the i+j+k = 1 plane.
    lo, hi = -(a - 1), b - 1
    cells = []
    for u in range(lo, hi + 1):
        for v in range(max(lo, -hi - u), min(hi, -lo - u) + 1):
            if (2 * u + v) % 3 == 1:
                i = (1 - 2 * u - v) // 3
                cells.append(Cell(i, i + u, i + u + v))
    return frozenset(cells)


def benzel(a: int, b: int) -> Region:
    """The (a, b)-benzel: cells with -(a-1) <= j-i, k-j, i-k <= b-1."""
    ca, cb = canonical_params(a, b)
    return Region(_benzel_cells(ca, cb), kind="benzel", params=(ca, cb),
                  requested=(a, b))


# Corners of a unit hexagonal cell relative to its center, written in the
# integer basis x + y*w (so +w**2 becomes (-1, -1)).
_CORNER_OFFSETS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1))


def _hexagon_vertices(a: int, b: int) -> tuple[tuple[int, int], ...]:
    # a*w + b, -a*w**2 - b, a*w**2 + b*w, -a - b*w, a + b*w**2, -a*w - b*w**2
    # rewritten in the x + y*w basis, in counterclockwise order.
    return ((b, a), (a - b, a), (-a, b - a), (-a, -b), (a - b, -b), (b, b - a))


def benzel_by_hexagon_clip(a: int, b: int) -> Region:
    """The (a, b)-benzel built by clipping cells against its bounding hexagon.

    A cell belongs to the benzel iff its closed unit hexagon lies inside the
    closed hexagon with the six vertices above.  Containment is decided with
    integer cross products in the x + y*w basis (the basis change to
    Cartesian coordinates has positive determinant, so orientation signs
    carry over exactly); no floating point is involved.
    """
    ca, cb = canonical_params(a, b)
    verts = _hexagon_vertices(ca, cb)
    edges = []
    for m in range(6):
        px, py = verts[m]
        qx, qy = verts[(m + 1) % 6]
        edges.append((px, py, qx - px, qy - py))

    def inside(x: int, y: int) -> bool:
        for px, py, dx, dy in edges:
            if dx * (y - py) - dy * (x - px) < 0:
                return False
        return True

    span = ca + cb
    cells = []
    for x in range(-span, span + 1):
        for y in range(-span, span + 1):
            if (x + y) % 3 != 1:
                continue
            if all(inside(x + ox, y + oy) for ox, oy in _CORNER_OFFSETS):
                k = (1 - x - y) // 3
                cells.append(Cell(x + k, y + k, k))
    return Region(frozenset(cells), kind="benzel", params=(ca, cb),
                  requested=(a, b))


def triangle(n: int) -> Region:
    """The upward triangle T_n with n cells on each side (n(n+1)/2 cells)."""
    if n < 2:
        raise ParameterError(f"triangle side must be at least 2, got {n}")
    p = (n + 2) // 3
    q = (n - p + 1) // 2
    r = n - p - q
    cells = []
    for i in range(1 - q - r, p + 1):
        for j in range(1 - i - r, q + 1):
            cells.append(Cell(i, j, 1 - i - j))
    return Region(frozenset(cells), kind="triangle", params=(n,),
                  requested=(n,))


def custom_region(cells: Iterable[Cell | tuple[int, int, int]]) -> Region:
    """Wrap an explicit cell collection; validates the i+j+k = 1 constraint."""
    out = set()
    for c in cells:
        c = Cell(*c)
        if c.i + c.j + c.k != 1:
            raise ParameterError(f"cell {tuple(c)} is off the i+j+k=1 plane")
        out.add(c)
    return Region(frozenset(out), kind="custom")


def neighbors(c: Cell) -> tuple[Cell, ...]:
    """The six cells adjacent to c, in a fixed order."""
    return tuple(Cell(c.i + di, c.j + dj, c.k + dk)
                 for di, dj, dk in NEIGHBOR_OFFSETS)


def rotate120(c: Cell) -> Cell:
    """Rotate a cell by 120 degrees counterclockwise about the origin."""
    return Cell(c.k, c.i, c.j)


def reflect(c: Cell) -> Cell:
    """Reflect a cell across the real axis (swaps the j and k axes)."""
    return Cell(c.i, c.k, c.j)


def center_coordinates(c: Cell) -> tuple[float, float]:
    """Cartesian center of a cell (y grows upward, one unit = circumradius)."""
    x = c.i - (c.j + c.k) / 2
    y = (c.j - c.k) * (3 ** 0.5) / 2
    return x, y
