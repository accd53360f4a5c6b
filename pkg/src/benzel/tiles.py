"""The five trimer prototiles (two stones, three bones) and their placements.

Prototiles may be translated but not rotated or reflected.  A placement is a
prototile kind plus the anchor cell, where the anchor is the lexicographically
least of the three covered cells, so (kind, anchor) pairs are unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple

from .grid import Cell, Region, reflect, rotate120


class TileSetError(ValueError):
    """Raised for invalid tile-set codes or empty tile sets."""


class Prototile(Enum):
    RIGHT_STONE = 0
    LEFT_STONE = 1
    VERTICAL_BONE = 2
    RISING_BONE = 3
    FALLING_BONE = 4

    @property
    def offsets(self) -> tuple[tuple[int, int, int], ...]:
        return _OFFSETS[self]

    @property
    def is_stone(self) -> bool:
        return self in (Prototile.RIGHT_STONE, Prototile.LEFT_STONE)

    @property
    def is_bone(self) -> bool:
        return not self.is_stone


# Cell offsets from the anchor, in ascending lexicographic order (the anchor
# itself is always the zero offset).  The right stone is the translation class
# of {(1,0,0), (0,1,0), (0,0,1)}; the left stone is the translation class of
# {(0,1,0), (1,0,0), (1,1,-1)}; the bones are straight runs of three cells in
# the directions (0,1,-1), (1,0,-1) and (1,-1,0).
_OFFSETS: dict[Prototile, tuple[tuple[int, int, int], ...]] = {
    Prototile.RIGHT_STONE: ((0, 0, 0), (0, 1, -1), (1, 0, -1)),
    Prototile.LEFT_STONE: ((0, 0, 0), (1, -1, 0), (1, 0, -1)),
    Prototile.VERTICAL_BONE: ((0, 0, 0), (0, 1, -1), (0, 2, -2)),
    Prototile.RISING_BONE: ((0, 0, 0), (1, 0, -1), (2, 0, -2)),
    Prototile.FALLING_BONE: ((0, 0, 0), (1, -1, 0), (2, -2, 0)),
}

# Bones in the order a code digit k consumes them.
BONE_ORDER = (Prototile.VERTICAL_BONE, Prototile.RISING_BONE,
              Prototile.FALLING_BONE)

_BY_OFFSETS = {offs: kind for kind, offs in _OFFSETS.items()}


class Placement(NamedTuple):
    kind: Prototile
    anchor: Cell

    def cells(self) -> tuple[Cell, Cell, Cell]:
        a = self.anchor
        return tuple(Cell(a.i + di, a.j + dj, a.k + dk)
                     for di, dj, dk in _OFFSETS[self.kind])

    def sort_key(self):
        return (self.anchor, self.kind.value)


@dataclass(frozen=True)
class TileSet:
    """An allowed subset of the five prototiles."""

    kinds: frozenset[Prototile]

    def __post_init__(self):
        if not self.kinds:
            raise TileSetError("tile set must allow at least one prototile")

    def code(self) -> str:
        """Three-digit code: right-stone flag, left-stone flag, bone count."""
        i = int(Prototile.RIGHT_STONE in self.kinds)
        j = int(Prototile.LEFT_STONE in self.kinds)
        k = sum(1 for p in self.kinds if p.is_bone)
        return f"{i}{j}{k}"

    def sorted_kinds(self) -> tuple[Prototile, ...]:
        return tuple(sorted(self.kinds, key=lambda p: p.value))


def tileset_from_code(i: int, j: int, k: int) -> TileSet:
    """Decode a T_ijk code: digit 1 allows the matching stone, k bones are
    taken in the fixed order vertical, rising, falling."""
    if i not in (0, 1) or j not in (0, 1) or k not in (0, 1, 2, 3):
        raise TileSetError(f"invalid tile-set code ({i}, {j}, {k})")
    kinds = set(BONE_ORDER[:k])
    if i:
        kinds.add(Prototile.RIGHT_STONE)
    if j:
        kinds.add(Prototile.LEFT_STONE)
    if not kinds:
        raise TileSetError("tile-set code 000 allows no prototiles")
    return TileSet(frozenset(kinds))


def parse_tileset(text: str) -> tuple[TileSet, int]:
    """Parse a CLI code like "113" or "113;3" into (tile set, stone weight)."""
    code, sep, weight_part = text.partition(";")
    code = code.strip()
    if len(code) != 3 or not code.isdigit():
        raise TileSetError(f"tile-set code must be three digits, got {text!r}")
    if sep and not weight_part:
        raise TileSetError(f"bad stone weight in {text!r}")
    weight = 1
    if weight_part:
        try:
            weight = int(weight_part)
        except ValueError:
            raise TileSetError(f"bad stone weight in {text!r}") from None
        if weight < 1:
            raise TileSetError(f"stone weight must be positive, got {text!r}")
    return tileset_from_code(int(code[0]), int(code[1]), int(code[2])), weight


ALL_CODES = tuple(f"{i}{j}{k}" for i in (0, 1) for j in (0, 1)
                  for k in (0, 1, 2, 3) if (i, j, k) != (0, 0, 0))


def placements_in(region: Region, tiles: TileSet) -> tuple[Placement, ...]:
    """All placements of the allowed kinds with every cell inside the region,
    ordered by (anchor, kind)."""
    cells = region.cells
    kinds = tiles.sorted_kinds()
    found = []
    for anchor in region.sorted_cells:
        i, j, k = anchor
        for kind in kinds:
            offs = _OFFSETS[kind]
            if (Cell(i + offs[1][0], j + offs[1][1], k + offs[1][2]) in cells
                    and Cell(i + offs[2][0], j + offs[2][1], k + offs[2][2])
                    in cells):
                found.append(Placement(kind, anchor))
    return tuple(found)


def placements_covering(cell: Cell, region: Region,
                        tiles: TileSet) -> tuple[Placement, ...]:
    """The placements inside the region that cover the given cell."""
    if cell not in region:
        raise TileSetError(f"cell {tuple(cell)} is not in the region")
    cells = region.cells
    found = []
    for kind in tiles.sorted_kinds():
        offs = _OFFSETS[kind]
        for di, dj, dk in offs:
            anchor = Cell(cell.i - di, cell.j - dj, cell.k - dk)
            if all(Cell(anchor.i + oi, anchor.j + oj, anchor.k + ok) in cells
                   for oi, oj, ok in offs):
                found.append(Placement(kind, anchor))
    return tuple(sorted(set(found), key=Placement.sort_key))


def identify_placement(cells: Iterable[Cell]) -> Placement | None:
    """Recognize a 3-cell set as a placement, or None if it matches no kind."""
    cs = sorted(Cell(*c) for c in cells)
    if len(cs) != 3:
        return None
    a = cs[0]
    offs = tuple((c.i - a.i, c.j - a.j, c.k - a.k) for c in cs)
    kind = _BY_OFFSETS.get(offs)
    return Placement(kind, a) if kind is not None else None


def rotate_placement(p: Placement) -> Placement:
    """Image of a placement under a 120-degree rotation of the grid."""
    out = identify_placement(rotate120(c) for c in p.cells())
    assert out is not None
    return out


def reflect_placement(p: Placement) -> Placement:
    """Image of a placement under reflection across the real axis."""
    out = identify_placement(reflect(c) for c in p.cells())
    assert out is not None
    return out
