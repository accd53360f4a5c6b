"""Exact enumeration of stones-and-bones trimer tilings.

The package counts, enumerates, verifies, and draws tilings of benzel and
triangle regions of the hexagonal grid by five unit-trimer prototiles: two
stone orientations and three bone directions.
"""

from .grid import (Cell, ParameterError, Region, benzel, canonical_params,
                   custom_region, triangle)
from .tiles import (ALL_CODES, Placement, Prototile, TileSet, TileSetError,
                    parse_tileset, tileset_from_code)
from .engine import (BudgetExceededError, Count, T, Tiling, cl_statistic,
                     count, count_weighted, enumerate_tilings)
from .theory import (area, bone_benzel_params, check_prime_bound,
                     cl_invariant, factorize, padic_profile,
                     predict_zero_or_one, royal_paths, schroeder,
                     two_adic_valuation)
from .flips import FlipGraph, FlipMove, apply_flip, find_flips, flip_graph
from .cache import Cache, CacheRecord
from .oeis import OeisSequence, bundled_sequence, compare, fetch_sequence
from .render import region_svg, tiling_svg

__version__ = "0.1.0"

__all__ = [
    "ALL_CODES", "BudgetExceededError", "Cache", "CacheRecord", "Cell",
    "Count", "FlipGraph", "FlipMove", "OeisSequence", "ParameterError",
    "Placement", "Prototile", "Region", "T", "TileSet", "TileSetError",
    "Tiling", "apply_flip", "area", "benzel", "bone_benzel_params",
    "bundled_sequence", "canonical_params", "check_prime_bound",
    "cl_invariant", "cl_statistic", "compare", "count", "count_weighted",
    "custom_region", "enumerate_tilings", "factorize", "fetch_sequence",
    "find_flips", "flip_graph", "padic_profile", "parse_tileset",
    "predict_zero_or_one", "region_svg", "royal_paths", "schroeder",
    "tileset_from_code", "tiling_svg", "triangle", "two_adic_valuation",
    "__version__",
]
