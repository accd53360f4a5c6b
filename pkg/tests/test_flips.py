"""Local 2-flip moves and flip-graph construction."""

import pytest

from benzel.engine import (BudgetExceededError, cl_statistic,
                           enumerate_tilings)
from benzel.flips import (FlipError, apply_flip, find_flips, flip_graph,
                          reverse)
from benzel.grid import benzel
from benzel.tiles import Prototile, tileset_from_code

T112 = tileset_from_code(1, 1, 2)
T113 = tileset_from_code(1, 1, 3)


def _tilings(a, b, tiles):
    return list(enumerate_tilings(benzel(a, b), tiles))


def test_every_flip_touches_exactly_six_cells():
    for tiling in _tilings(5, 6, T113):
        for move in find_flips(tiling, T113):
            removed = {c for p in move.remove for c in p.cells()}
            added = {c for p in move.add for c in p.cells()}
            assert len(removed) == 6
            assert removed == added


def test_flips_change_the_pair():
    for tiling in _tilings(4, 5, T113):
        for move in find_flips(tiling, T113):
            assert set(move.remove) != set(move.add)


def test_apply_flip_round_trip():
    tiling = _tilings(6, 6, T112)[0]
    moves = list(find_flips(tiling, T112))
    assert moves
    for move in moves[:10]:
        there = apply_flip(tiling, move)
        assert there != tiling
        back = apply_flip(there, reverse(move))
        assert back == tiling


def test_apply_flip_rejects_foreign_moves():
    a = _tilings(6, 6, T112)
    move = next(iter(find_flips(a[0], T112)))
    victim = next(t for t in a if not set(move.remove) <= t.placements)
    with pytest.raises(FlipError):
        apply_flip(victim, move)


def test_flips_preserve_the_stone_imbalance():
    for tiling in _tilings(5, 6, T113)[:40]:
        base = cl_statistic(tiling)
        for move in find_flips(tiling, T113):
            assert cl_statistic(apply_flip(tiling, move)) == base


def test_flip_classification():
    """Every move swaps an opposite-chirality stone pair with two bones, or
    a stone-plus-bone with a stone of the same chirality plus another
    bone."""
    for tiling in _tilings(5, 6, T113)[:60]:
        for move in find_flips(tiling, T113):
            out_stones = sorted(p.kind.name for p in move.remove
                                if p.kind.is_stone)
            in_stones = sorted(p.kind.name for p in move.add
                               if p.kind.is_stone)
            if len(out_stones) == 2:
                assert out_stones == ["LEFT_STONE", "RIGHT_STONE"]
                assert in_stones == []
            elif len(out_stones) == 1:
                assert in_stones == out_stones
            else:
                assert in_stones == ["LEFT_STONE", "RIGHT_STONE"]


def test_all_stone_tiling_is_frozen():
    """The unique all-right-stone tiling of a forced benzel admits no
    flips at all."""
    tilings = _tilings(4, 6, T113)
    assert len(tilings) == 1
    assert all(p.kind is Prototile.RIGHT_STONE
               for p in tilings[0].placements)
    assert list(find_flips(tilings[0], T113)) == []


def test_small_flip_graph_shape():
    g = flip_graph(benzel(3, 3), T113)
    assert len(g.vertices) == 3
    assert len(g.edges) == 3
    assert g.component_count == 1
    assert g.connected
    assert g.diameter == 1


def test_type_112_graph_on_the_six_six_benzel():
    g = flip_graph(benzel(6, 6), T112)
    assert len(g.vertices) == 48
    assert g.connected
    assert g.diameter == 12


def test_flip_graph_budget_carries_the_count():
    with pytest.raises(BudgetExceededError) as info:
        flip_graph(benzel(6, 6), T112, max_tilings=10)
    assert info.value.count == 48


def test_flip_graph_edges_are_symmetric_indices():
    g = flip_graph(benzel(5, 5), T113)
    for x, y in g.edges:
        assert 0 <= x < y < len(g.vertices)
