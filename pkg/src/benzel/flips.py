"""2-flip moves between tilings and the flip graph of a region.

A 2-flip removes two tiles of a tiling and re-partitions their six cells
into a different pair of allowed tiles.  Defining the move semantically (any
re-partition of a 6-cell union) captures every local move of this size --
both trading two stones of opposite sign for two bones and trading a
stone+bone pair for a stone of the same orientation plus a different bone --
without hand-enumerating orientations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .grid import Cell, Region
from .tiles import Placement, TileSet, identify_placement
from .engine import (BudgetExceededError, Tiling, count, enumerate_tilings)


class FlipError(ValueError):
    """Raised for invalid tilings or moves that do not apply."""


class FlipMove(NamedTuple):
    """Replace the two placements in ``remove`` by the two in ``add``;
    both pairs cover the same six cells and are stored sorted."""

    remove: tuple[Placement, Placement]
    add: tuple[Placement, Placement]


def reverse(move: FlipMove) -> FlipMove:
    return FlipMove(remove=move.add, add=move.remove)


def _pair(p: Placement, q: Placement) -> tuple[Placement, Placement]:
    return tuple(sorted((p, q), key=Placement.sort_key))


def _validate_tiling(tiling: Tiling, tiles: TileSet) -> None:
    seen: set[Cell] = set()
    for p in tiling.placements:
        if p.kind not in tiles.kinds:
            raise FlipError(f"tiling uses {p.kind.name}, which the tile set "
                            f"{tiles.code()} does not allow")
        for c in p.cells():
            if c in seen:
                raise FlipError(f"tiling covers cell {tuple(c)} twice")
            seen.add(c)


def _adjacent(p: Placement, q: Placement) -> bool:
    # Two tiles can only take part in a common flip if some pair of their
    # cells are grid neighbors; a placement spans at most 2 in each axis,
    # so anchors more than 3 apart in i can never touch.
    for c in p.cells():
        for d in q.cells():
            if abs(c.i - d.i) + abs(c.j - d.j) + abs(c.k - d.k) == 2:
                return True
    return False


def _partitions(cells: frozenset[Cell],
                tiles: TileSet) -> Iterator[tuple[Placement, Placement]]:
    """All unordered partitions of a 6-cell set into two allowed placements,
    each yielded once (the first placement covers the least cell)."""
    least = min(cells)
    seen: set[tuple[Placement, Placement]] = set()
    for kind in tiles.sorted_kinds():
        for di, dj, dk in kind.offsets:
            anchor = Cell(least.i - di, least.j - dj, least.k - dk)
            first = Placement(kind, anchor)
            fcells = frozenset(first.cells())
            if least not in fcells or not fcells <= cells:
                continue
            second = identify_placement(cells - fcells)
            if second is None or second.kind not in tiles.kinds:
                continue
            pair = _pair(first, second)
            if pair not in seen:
                seen.add(pair)
                yield pair


def find_flips(tiling: Tiling, tiles: TileSet) -> list[FlipMove]:
    """Every 2-flip available from a tiling, in deterministic order."""
    _validate_tiling(tiling, tiles)
    placements = sorted(tiling.placements, key=Placement.sort_key)
    moves = []
    for x in range(len(placements)):
        p = placements[x]
        for y in range(x + 1, len(placements)):
            q = placements[y]
            if q.anchor.i - p.anchor.i > 3:
                break  # anchors are sorted; later q are even farther
            if not _adjacent(p, q):
                continue
            union = frozenset(p.cells()) | frozenset(q.cells())
            old = _pair(p, q)
            for new in _partitions(union, tiles):
                if new != old:
                    moves.append(FlipMove(remove=old, add=new))
    return moves


def apply_flip(tiling: Tiling, move: FlipMove) -> Tiling:
    """The tiling with move.remove replaced by move.add."""
    remove, add = set(move.remove), set(move.add)
    if not remove <= tiling.placements:
        raise FlipError("move does not apply: placements to remove are not "
                        "all present")
    removed_cells = frozenset(c for p in remove for c in p.cells())
    added_cells = frozenset(c for p in add for c in p.cells())
    if removed_cells != added_cells or len(added_cells) != 6:
        raise FlipError("move does not apply: the added pair does not cover "
                        "exactly the removed six cells")
    return Tiling((tiling.placements - remove) | add)


@dataclass(frozen=True)
class FlipGraph:
    """Flip graph over all tilings of one region.

    ``vertices`` lists tilings in enumeration order; ``edges`` holds index
    pairs (x, y) with x < y; ``diameter`` is None when the graph is
    disconnected or too large for all-pairs search.
    """

    vertices: tuple[Tiling, ...]
    edges: frozenset[tuple[int, int]]
    component_count: int
    diameter: int | None

    @property
    def connected(self) -> bool:
        return self.component_count == 1


_DIAMETER_LIMIT = 2000


def flip_graph(region: Region, tiles: TileSet,
               max_tilings: int = 10 ** 4) -> FlipGraph:
    """Build the flip graph of a region, refusing oversized instances.

    The tiling count is checked first; if it exceeds max_tilings a
    BudgetExceededError carrying the exact count is raised.  Connectivity
    is explored breadth-first from the first-enumerated tiling.
    """
    total = count(region, tiles)
    if total.value > max_tilings:
        raise BudgetExceededError(
            f"region has {total.value} tilings, over the flip-graph budget "
            f"of {max_tilings}", nodes=total.nodes, elapsed=total.elapsed,
            count=total.value)

    vertices = tuple(enumerate_tilings(region, tiles))
    index = {t: x for x, t in enumerate(vertices)}
    neighbors: list[set[int]] = [set() for _ in vertices]
    edges = set()
    for x, tiling in enumerate(vertices):
        for move in find_flips(tiling, tiles):
            y = index[apply_flip(tiling, move)]
            if y != x:
                edges.add((min(x, y), max(x, y)))
                neighbors[x].add(y)
                neighbors[y].add(x)

    def bfs_depths(start: int) -> dict[int, int]:
        depth = {start: 0}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in neighbors[u]:
                if v not in depth:
                    depth[v] = depth[u] + 1
                    queue.append(v)
        return depth

    components = 0
    visited: set[int] = set()
    for start in range(len(vertices)):
        if start not in visited:
            components += 1
            visited.update(bfs_depths(start))

    diameter = None
    if components == 1 and 0 < len(vertices) <= _DIAMETER_LIMIT:
        diameter = max(max(bfs_depths(v).values())
                       for v in range(len(vertices)))
    return FlipGraph(vertices=vertices, edges=frozenset(edges),
                     component_count=components, diameter=diameter)
