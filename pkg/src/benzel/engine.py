"""Exact-cover engines for counting and enumerating trimer tilings.

Both engines branch on the first uncovered cell in the region's lexicographic
cell order and try the covering placements in (anchor, kind) order, so the
enumeration order is deterministic.  The memoized engine additionally caches
subproblem counts keyed by (branch index, occupancy bitmask of the next W
cells), where W is the maximum index span of any placement in the region --
cells before the branch index are always covered, and no placement reaches
more than W cells ahead, so the pair identifies the subproblem exactly.

Counts are exact big integers; budgets are hard errors, never truncation.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from typing import Iterator

from .grid import Cell, Region, benzel
from .tiles import Placement, Prototile, TileSet, placements_in, tileset_from_code


class BudgetExceededError(RuntimeError):
    """A node or time budget ran out; carries partial diagnostics."""

    def __init__(self, message: str, *, nodes: int, elapsed: float,
                 count: int | None = None):
        super().__init__(message)
        self.nodes = nodes
        self.elapsed = elapsed
        self.count = count


@dataclass(frozen=True)
class Count:
    value: int
    engine: str
    elapsed: float
    nodes: int


@dataclass(frozen=True)
class Tiling:
    placements: frozenset[Placement]

    def cells(self) -> frozenset[Cell]:
        return frozenset(c for p in self.placements for c in p.cells())

    def covers(self, region: Region) -> bool:
        total = sum(3 for _ in self.placements)
        return total == len(region) and self.cells() == region.cells


class _Budget:
    __slots__ = ("max_nodes", "max_seconds", "start", "nodes")

    def __init__(self, max_nodes: int | None, max_seconds: float | None):
        self.max_nodes = max_nodes
        self.max_seconds = max_seconds
        self.start = time.monotonic()
        self.nodes = 0

    def spend(self, n: int = 1) -> None:
        self.nodes += n
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceededError(
                f"node budget {self.max_nodes} exceeded",
                nodes=self.nodes, elapsed=time.monotonic() - self.start)
        if (self.max_seconds is not None and not self.nodes % 4096
                and time.monotonic() - self.start > self.max_seconds):
            raise BudgetExceededError(
                f"time budget {self.max_seconds}s exceeded",
                nodes=self.nodes, elapsed=time.monotonic() - self.start)

    def elapsed(self) -> float:
        return time.monotonic() - self.start


def _prepare(region: Region, tiles: TileSet, stone_weight: int):
    """Index the region and group placements by their first covered cell.

    Returns (n, by_first, window) where by_first[p] lists
    (occupancy bits relative to p, weight, placement).
    """
    order = region.sorted_cells
    index = {c: x for x, c in enumerate(order)}
    n = len(order)
    by_first: list[list[tuple[int, int, Placement]]] = [[] for _ in range(n)]
    window = 1
    for pl in placements_in(region, tiles):
        idx = sorted(index[c] for c in pl.cells())
        first, r1, r2 = idx[0], idx[1] - idx[0], idx[2] - idx[0]
        window = max(window, idx[2] - idx[0] + 1)
        w = stone_weight if pl.kind.is_stone else 1
        by_first[first].append(((1 << r1) | (1 << r2), w, pl))
    return n, by_first, window


def _ensure_recursion_room(n: int) -> None:
    limit = 2 * n + 200
    if sys.getrecursionlimit() < limit:
        sys.setrecursionlimit(limit)


def count_weighted(region: Region, tiles: TileSet, stone_weight: int = 1, *,
                   engine: str = "memo", max_nodes: int | None = None,
                   max_seconds: float | None = None) -> Count:
    """Weighted tiling count: each tiling contributes stone_weight**#stones."""
    if engine not in ("plain", "memo"):
        raise ValueError(f"unknown engine {engine!r}")
    budget = _Budget(max_nodes, max_seconds)
    n, by_first, _ = _prepare(region, tiles, stone_weight)
    _ensure_recursion_room(n)
    spend = budget.spend

    if engine == "memo":
        memo: dict[tuple[int, int], int] = {}

        def rec(p: int, mask: int) -> int:
            while mask & 1:
                mask >>= 1
                p += 1
            if p == n:
                return 1
            key = (p, mask)
            got = memo.get(key)
            if got is not None:
                return got
            spend()
            total = 0
            for bits, w, _pl in by_first[p]:
                if not mask & bits:
                    total += w * rec(p + 1, (mask | bits) >> 1)
            memo[key] = total
            return total

    else:

        def rec(p: int, mask: int) -> int:
            while mask & 1:
                mask >>= 1
                p += 1
            if p == n:
                return 1
            spend()
            total = 0
            for bits, w, _pl in by_first[p]:
                if not mask & bits:
                    total += w * rec(p + 1, (mask | bits) >> 1)
            return total

    value = rec(0, 0)
    return Count(value=value, engine=engine, elapsed=budget.elapsed(),
                 nodes=budget.nodes)


def count(region: Region, tiles: TileSet, *, engine: str = "memo",
          max_nodes: int | None = None,
          max_seconds: float | None = None) -> Count:
    """Number of tilings of the region by the allowed prototiles."""
    return count_weighted(region, tiles, 1, engine=engine,
                          max_nodes=max_nodes, max_seconds=max_seconds)


def enumerate_tilings(region: Region, tiles: TileSet,
                      limit: int | None = None, *,
                      max_nodes: int | None = None,
                      max_seconds: float | None = None) -> Iterator[Tiling]:
    """Yield every tiling in deterministic (depth-first, placement-ordered)
    order; stops early after `limit` tilings when given."""
    if limit is not None and limit <= 0:
        return
    budget = _Budget(max_nodes, max_seconds)
    n, by_first, _ = _prepare(region, tiles, 1)
    _ensure_recursion_room(n)
    chosen: list[Placement] = []
    produced = 0

    def rec(p: int, mask: int) -> Iterator[Tiling]:
        nonlocal produced
        while mask & 1:
            mask >>= 1
            p += 1
        if p == n:
            produced += 1
            yield Tiling(frozenset(chosen))
            return
        budget.spend()
        for bits, _w, pl in by_first[p]:
            if not mask & bits:
                chosen.append(pl)
                yield from rec(p + 1, (mask | bits) >> 1)
                chosen.pop()
                if limit is not None and produced >= limit:
                    return

    yield from rec(0, 0)


def cl_statistic(tiling: Tiling) -> int:
    """Cells covered by right stones minus cells covered by left stones.

    Constant across all tilings of a fixed region (each bone move trades
    stones in pairs), and for benzels it equals the closed form in
    theory.cl_invariant.
    """
    right = sum(1 for p in tiling.placements
                if p.kind is Prototile.RIGHT_STONE)
    left = sum(1 for p in tiling.placements if p.kind is Prototile.LEFT_STONE)
    return 3 * (right - left)


def T(i: int, j: int, k: int, a: int, b: int, stone_weight: int = 1,
      **budget) -> int:
    """Convenience wrapper: the table entry T_ijk(a, b), optionally weighted."""
    return count_weighted(benzel(a, b), tileset_from_code(i, j, k),
                          stone_weight, **budget).value
