"""Command-line workbench: regions, counts, tables, verification, rendering.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 budget
exceeded, 4 network or fixture failure.  Counting commands read and append
an on-disk result cache (see the cache module) unless --no-cache is given.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import theory
from .cache import Cache, tileset_key
from .engine import BudgetExceededError, count_weighted, enumerate_tilings
from .flips import flip_graph
from .grid import ParameterError, Region, benzel, triangle
from .oeis import OeisError, bundled_sequence, compare, fetch_sequence, parse_b_file
from .render import region_svg, tiling_svg
from .tiles import TileSetError, parse_tileset, tileset_from_code

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_NETWORK = 4


def _fixture(name: str) -> dict:
    path = Path(__file__).parent / "fixtures" / f"{name}.json"
    return json.loads(path.read_text())


def appendix_values(key: str) -> dict[int, int]:
    """A bundled reference list as {index: value}."""
    entry = _fixture("appendix")[key]
    first = entry["first"]
    return {first + x: int(v) for x, v in enumerate(entry["values"])}


def table_values(code: str) -> dict[tuple[int, int], int]:
    """The bundled reference table for one tile-set code."""
    table = _fixture("tables")["tables"][code]
    out = {}
    for key, value in table.items():
        a, b = key.split(",")
        out[int(a), int(b)] = value
    return out


def strictly_canonical(a: int, b: int) -> bool:
    """Parameters strictly inside the cone, where no smaller benzel with the
    same cells exists: a <= 2b-2 and b <= 2a-2."""
    return a <= 2 * b - 2 and b <= 2 * a - 2


class Counter:
    """Cached access to tiling counts for one CLI invocation."""

    def __init__(self, cache: Cache | None, engine: str = "memo",
                 no_recompute: bool = False,
                 max_nodes: int | None = None,
                 max_seconds: float | None = None):
        self.cache = cache
        self.engine = engine
        self.no_recompute = no_recompute
        self.max_nodes = max_nodes
        self.max_seconds = max_seconds

    def count(self, region: Region, tiles_text: str) -> int:
        tiles, weight = parse_tileset(tiles_text)
        key_text = tileset_key(tiles.code(), weight)
        region_key = region.key()
        if self.cache is not None and region_key is not None:
            hit = self.cache.lookup(region_key, key_text)
            if hit is not None:
                return hit.count
        if self.no_recompute:
            raise BudgetExceededError(
                f"--no-recompute: no cached count for {region_key} / "
                f"{key_text}", nodes=0, elapsed=0.0)
        result = count_weighted(region, tiles, weight, engine=self.engine,
                                max_nodes=self.max_nodes,
                                max_seconds=self.max_seconds)
        if self.cache is not None and region_key is not None:
            self.cache.store_count(region_key, key_text, result.value,
                                   result.engine, result.elapsed)
        return result.value

    def benzel_count(self, a: int, b: int, tiles_text: str) -> int:
        return self.count(benzel(a, b), tiles_text)


def _add_cache_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cache", metavar="PATH",
                   help="cache file (default $BENZEL_CACHE or "
                        "./benzel-cache.jsonl)")
    p.add_argument("--no-cache", action="store_true",
                   help="neither read nor write the result cache")


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-nodes", type=int, metavar="N",
                   help="abort after N search nodes")
    p.add_argument("--max-seconds", type=float, metavar="S",
                   help="abort after S seconds per count")


def _add_region_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", type=int, help="benzel parameter a")
    p.add_argument("--b", type=int, help="benzel parameter b")
    p.add_argument("--triangle", type=int, metavar="N",
                   help="triangle with N cells per side instead of a benzel")


def _region_from_args(args) -> Region:
    if args.triangle is not None:
        if args.a is not None or args.b is not None:
            raise ParameterError("give either --a/--b or --triangle, not both")
        return triangle(args.triangle)
    if args.a is None or args.b is None:
        raise ParameterError("a region needs --a and --b, or --triangle")
    return benzel(args.a, args.b)


def _counter_from_args(args, engine: str | None = None) -> Counter:
    cache = None
    if not getattr(args, "no_cache", False):
        cache = Cache(getattr(args, "cache", None))
    return Counter(cache,
                   engine=engine or getattr(args, "engine", "memo"),
                   no_recompute=getattr(args, "no_recompute", False),
                   max_nodes=getattr(args, "max_nodes", None),
                   max_seconds=getattr(args, "max_seconds", None))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ---------------------------------------------------------------- region --

def cmd_region(args) -> int:
    region = _region_from_args(args)
    if args.format == "json":
        cells = [[c.i, c.j, c.k] for c in region.sorted_cells]
        _emit(json.dumps(cells), args.out)
    else:
        _emit(region_svg(region), args.out)
    return EXIT_OK


# ----------------------------------------------------------------- count --

def cmd_count(args) -> int:
    region = _region_from_args(args)
    counter = _counter_from_args(args)
    value = counter.count(region, args.tiles)
    print(value)
    return EXIT_OK


# ----------------------------------------------------------------- table --

def _table_worker(job):
    code_text, a, b, engine, max_nodes, max_seconds = job
    tiles, weight = parse_tileset(code_text)
    try:
        result = count_weighted(benzel(a, b), tiles, weight, engine=engine,
                                max_nodes=max_nodes, max_seconds=max_seconds)
    except BudgetExceededError:
        return a, b, None, None, None
    return a, b, result.value, result.engine, result.elapsed


def cmd_table(args) -> int:
    if args.max < 2:
        raise ParameterError("--max must be at least 2")
    code_text = (args.type if args.stone_weight in (None, 1)
                 else f"{args.type};{args.stone_weight}")
    parse_tileset(code_text)  # validate early
    span = range(2, args.max + 1)
    wanted = [(a, b) for a in span for b in span if strictly_canonical(a, b)]

    counter = _counter_from_args(args)
    values: dict[tuple[int, int], int | None] = {}
    jobs = []
    for a, b in wanted:
        if counter.cache is not None:
            hit = counter.cache.lookup(("benzel", a, b),
                                       tileset_key(args.type,
                                                   args.stone_weight or 1))
            if hit is not None:
                values[a, b] = hit.count
                continue
        jobs.append((code_text, a, b, args.engine, args.max_nodes,
                     args.max_seconds))

    def record(a, b, value, engine, elapsed):
        values[a, b] = value
        if value is not None and counter.cache is not None:
            counter.cache.store_count(
                ("benzel", a, b),
                tileset_key(args.type, args.stone_weight or 1),
                value, engine, elapsed)

    if args.jobs > 1 and jobs:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for a, b, value, engine, elapsed in pool.map(_table_worker, jobs):
                record(a, b, value, engine, elapsed)
    else:
        for job in jobs:
            record(*_table_worker(job))

    # Table layout: rows a, columns b, blanks
    # at non-canonical cells.
    def cell_text(a, b):
        if (a, b) not in values:
            return ""
        return "?" if values[a, b] is None else str(values[a, b])

    widths = {b: max(len(str(b)),
                     max((len(cell_text(a, b)) for a in span), default=1))
              for b in span}
    label_w = max(len("a\\b"), len(str(args.max)))
    header = "  ".join(["a\\b".rjust(label_w)]
                       + [str(b).rjust(widths[b]) for b in span])
    lines = [header]
    for a in span:
        row = [str(a).rjust(label_w)]
        row += [cell_text(a, b).rjust(widths[b]) for b in span]
        lines.append("  ".join(row).rstrip())
    print("\n".join(lines))
    if any(v is None for v in values.values()):
        print("some entries exceeded the budget (marked '?')",
              file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


# ---------------------------------------------------------------- verify --

class _Report:
    """Collects per-instance pass/fail checks for one problem."""

    def __init__(self, problem: int, description: str):
        self.problem = problem
        self.description = description
        self.checks: list[dict] = []

    def check(self, name: str, expected, computed) -> None:
        ok = expected == computed
        self.checks.append({
            "name": name, "status": "pass" if ok else "fail",
            "expected": repr(expected), "computed": repr(computed)})

    def info(self, name: str, detail: str) -> None:
        self.checks.append({"name": name, "status": "info",
                            "detail": detail})

    @property
    def passed(self) -> bool:
        return all(c["status"] != "fail" for c in self.checks)

    def emit(self, as_json: bool = True) -> int:
        for c in self.checks:
            if c["status"] == "info":
                print(f"  [info] {c['name']}: {c['detail']}",
                      file=sys.stderr)
            else:
                mark = "ok" if c["status"] == "pass" else "FAIL"
                line = f"  [{mark}] {c['name']}"
                if c["status"] == "fail":
                    line += (f": expected {c['expected']}, computed "
                             f"{c['computed']}")
                print(line, file=sys.stderr)
        verdict = "pass" if self.passed else "FAIL"
        print(f"problem {self.problem}: {verdict} "
              f"({self.description})", file=sys.stderr)
        if as_json:
            print(json.dumps({
                "problem": self.problem,
                "description": self.description,
                "passed": self.passed,
                "checks": self.checks,
            }, indent=1))
        return EXIT_OK if self.passed else EXIT_MISMATCH


def _canonical_pairs(limit: int):
    return [(a, b) for a in range(2, limit + 1)
            for b in range(2, limit + 1) if strictly_canonical(a, b)]


def _verify_p1(args, counter: Counter) -> _Report:
    rep = _Report(1, "bones-only tilings exist only at the triangular-number "
                     "parameters")
    special = set()
    for k in range(2, 8):
        a, b = theory.bone_benzel_params(k)
        special.update({(a, b), (b, a)})
    for a, b in _canonical_pairs(args.a_max or 12):
        if (a, b) in special:
            continue
        rep.check(f"T_003({a},{b}) = 0", 0, counter.benzel_count(a, b, "003"))
    expected = appendix_values("p1")
    for k in range(2, (args.k_max or 3) + 1):
        a, b = theory.bone_benzel_params(k)
        rep.check(f"T_003({a},{b}) matches the reference value (k={k})",
                  expected[k], counter.benzel_count(a, b, "003"))
    return rep


def _verify_p2(args, counter: Counter) -> _Report:
    rep = _Report(2, "T_012(3n,3n) = 2^n n!")
    expected = appendix_values("p2")
    for n in range(1, (args.n_max or 4) + 1):
        got = counter.benzel_count(3 * n, 3 * n, "012")
        rep.check(f"T_012({3*n},{3*n}) = 2^{n} {n}!",
                  theory.formula_p2(n), got)
        if n in expected:
            rep.check(f"reference value at n={n}", expected[n], got)
    return rep


def _verify_p3(args, counter: Counter) -> _Report:
    rep = _Report(3, "T_012(3n+1,3n+2) = 2^n n!")
    for n in range(1, (args.n_max or 4) + 1):
        got = counter.benzel_count(3 * n + 1, 3 * n + 2, "012")
        rep.check(f"T_012({3*n+1},{3*n+2}) = 2^{n} {n}!",
                  theory.formula_p3(n), got)
    return rep


def _verify_p4(args, counter: Counter) -> _Report:
    rep = _Report(4, "type-013 tilings exist whenever the invariant is <= 0")
    for a, b in _canonical_pairs(args.a_max or 8):
        cl = theory.cl_invariant(a, b)
        got = counter.benzel_count(a, b, "013")
        if cl > 0:
            rep.check(f"invariant {cl} > 0 forces T_013({a},{b}) = 0",
                      0, got)
        else:
            rep.check(f"invariant {cl} <= 0 allows tilings at ({a},{b})",
                      True, got > 0)
    return rep


def _verify_p5(args, counter: Counter) -> _Report:
    rep = _Report(5, "T_102(n+3k,2n+3k-1) equals the product formula")
    for k in range(0, (args.k_max or 2) + 1):
        for n in range(1, (args.n_max or 3) + 1):
            if (k, n) == (0, 1):
                continue
            a, b = n + 3 * k, 2 * n + 3 * k - 1
            rep.check(f"T_102({a},{b}) (k={k}, n={n})",
                      theory.formula_p5(k, n),
                      counter.benzel_count(a, b, "102"))
    return rep


def _verify_p6(args, counter: Counter) -> _Report:
    rep = _Report(6, "T_103(n,2n-3) equals the factorial-ratio formula")
    for n in range(3, (args.n_max or 7) + 1):
        rep.check(f"T_103({n},{2*n-3}) (n={n})", theory.formula_p6(n),
                  counter.benzel_count(n, 2 * n - 3, "103"))
    return rep


def _verify_p7(args, counter: Counter) -> _Report:
    rep = _Report(7, "type-103 tilings exist whenever the invariant is >= 0")
    for a, b in _canonical_pairs(args.a_max or 8):
        cl = theory.cl_invariant(a, b)
        got = counter.benzel_count(a, b, "103")
        if cl < 0:
            rep.check(f"invariant {cl} < 0 forces T_103({a},{b}) = 0",
                      0, got)
        else:
            rep.check(f"invariant {cl} >= 0 allows tilings at ({a},{b})",
                      True, got > 0)
    return rep


def _verify_p8(args, counter: Counter) -> _Report:
    rep = _Report(8, "second quotient of T_112(3n,3n) matches the rational "
                     "form")
    expected = appendix_values("p8")
    for n in range(1, (args.n_max or 3) + 1):
        rep.check(f"T_112({3*n},{3*n}) reference (n={n})", expected[n],
                  counter.benzel_count(3 * n, 3 * n, "112"))
    for n in range(1, max(expected) - 1):
        got = Fraction(expected[n] * expected[n + 2], expected[n + 1] ** 2)
        rep.check(f"second quotient at n={n}", theory.quotient_p8(n), got)
    return rep


def _verify_p9(args, counter: Counter) -> _Report:
    rep = _Report(9, "T_112(3n+1,3n+1) has no prime factor >= 4n")
    expected = appendix_values("p9")
    for n in range(1, (args.n_max or 2) + 1):
        rep.check(f"T_112({3*n+1},{3*n+1}) reference (n={n})", expected[n],
                  counter.benzel_count(3 * n + 1, 3 * n + 1, "112"))
    for n, v in expected.items():
        rep.check(f"prime factors of the n={n} value all < {4*n}", True,
                  theory.check_prime_bound(n, v))
    return rep


def _verify_p10(args, counter: Counter) -> _Report:
    rep = _Report(10, "third-order quotient of T_112(3n+1,3n+2) matches the "
                      "rational form")
    expected = appendix_values("p10")
    for n in range(1, (args.n_max or 2) + 1):
        rep.check(f"T_112({3*n+1},{3*n+2}) reference (n={n})", expected[n],
                  counter.benzel_count(3 * n + 1, 3 * n + 2, "112"))
    for n in range(1, max(expected) - 2):
        got = Fraction(expected[n] * expected[n + 3],
                       expected[n + 1] * expected[n + 2])
        rep.check(f"quotient at n={n}", theory.quotient_p10(n), got)
    return rep


def _verify_p11(args, counter: Counter) -> _Report:
    rep = _Report(11, "T_112(3n-1,3n) has no prime factor >= 4n")
    expected = appendix_values("p11")
    for n in range(1, (args.n_max or 3) + 1):
        rep.check(f"T_112({3*n-1},{3*n}) reference (n={n})", expected[n],
                  counter.benzel_count(3 * n - 1, 3 * n, "112"))
    for n, v in expected.items():
        rep.check(f"prime factors of the n={n} value all < {4*n}", True,
                  theory.check_prime_bound(n, v))
    return rep


def _verify_p12(args, counter: Counter) -> _Report:
    rep = _Report(12, "T_112(n+2,2n+1) is the n-th large Schroeder number")
    seq = bundled_sequence("A006318")
    for n in range(1, (args.n_max or 4) + 1):
        got = counter.benzel_count(n + 2, 2 * n + 1, "112")
        rep.check(f"T_112({n+2},{2*n+1}) (n={n})", theory.schroeder(n), got)
        rep.check(f"reference sequence term {n}", seq.term(n), got)
    return rep


def _verify_p13(args, counter: Counter) -> _Report:
    rep = _Report(13, "T_112(n+2,2n) counts royal paths of order n")
    seq = bundled_sequence("A006319")
    for n in range(1, (args.n_max or 5) + 1):
        got = counter.benzel_count(n + 2, 2 * n, "112")
        rep.check(f"T_112({n+2},{2*n}) (n={n})", theory.royal_paths(n), got)
        rep.check(f"reference sequence term {n}", seq.term(n), got)
    return rep


def _verify_p14(args, counter: Counter) -> _Report:
    rep = _Report(14, "T_113 = 1 when a+b = 1 (mod 3)")
    for a, b in _canonical_pairs(args.a_max or 9):
        if (a + b) % 3 == 1:
            rep.check(f"T_113({a},{b}) = 1", 1,
                      counter.benzel_count(a, b, "113"))
    return rep


_PADIC = {
    15: ("p15", "113", 5, (4, 4, 4, 4, 4, 12, 4, 12)),
    16: ("p16", "113", 4, (2, 14, 2, 14, 10, 6, 10, 6)),
    17: ("p17", "113;3", 5, (4, 4, 12, 12, 4, 12, 12, 4)),
    18: ("p18", "113;3", 4, (14, 6, 10, 2, 6, 14, 2, 10)),
}


def _verify_padic(problem: int, args, counter: Counter) -> _Report:
    key, tiles_text, start, pattern = _PADIC[problem]
    offset = 4 if problem in (15, 17) else 3
    rep = _Report(problem, f"2-adic behavior of the {key} diagonal")
    expected = appendix_values(key)
    default_max = 10 if problem in (15, 16) else 8
    for n in range(3, (args.n_max or default_max) + 1):
        b = 2 * n - offset
        if b < 2:
            continue
        rep.check(f"diagonal value at n={n}", expected[n],
                  counter.benzel_count(n, b, tiles_text))
    window = [expected[n] for n in sorted(expected) if n >= start]
    modulus = args.mod or 16
    profile = theory.padic_profile(window, modulus, offset=start)
    if modulus == 16:
        cycled = tuple(pattern[x % len(pattern)] for x in range(len(window)))
        rep.check("mod-16 residues follow the observed pattern", cycled,
                  profile.residues)
        rep.check("least period mod 16", len(pattern),
                  profile.detected_period)
    else:
        rep.info(f"mod-{modulus} residues",
                 f"{profile.residues} period {profile.detected_period}")
    for small in (2, 4):
        srep = theory.padic_profile(window, small, offset=start)
        rep.check(f"constant mod {small}", 1, srep.detected_period)
    return rep


def _verify_p19(args, counter: Counter) -> _Report:
    rep = _Report(19, "flip connectivity: proved for type 112, evidence for "
                      "type 113")
    limit = args.max_tilings or 10 ** 4
    for a, b in _canonical_pairs(args.a_max or 7):
        n112 = counter.benzel_count(a, b, "112")
        if 0 < n112 <= limit:
            g = flip_graph(benzel(a, b), tileset_from_code(1, 1, 2), limit)
            rep.check(f"type-112 flip graph connected on ({a},{b}) "
                      f"({n112} tilings)", 1, g.component_count)
        n113 = counter.benzel_count(a, b, "113")
        if 0 < n113 <= limit:
            g = flip_graph(benzel(a, b), tileset_from_code(1, 1, 3), limit)
            if g.component_count == 1:
                rep.info(f"type-113 flip graph on ({a},{b})",
                         f"connected ({n113} tilings)")
            else:
                rep.info(f"type-113 flip graph on ({a},{b})",
                         f"*** DISCONNECTED: {g.component_count} components "
                         f"over {n113} tilings -- potential counterexample, "
                         f"please re-examine ***")
    return rep


def _verify_p20(args, counter: Counter) -> _Report:
    rep = _Report(20, "2-adic valuations of triangle stone-tiling counts")
    seq = bundled_sequence("A334875")
    counts = {0: 1}
    for n in range(2, (args.n_max or 14) + 1):
        counts[n] = counter.count(triangle(n), "110")
        rep.check(f"stone tilings of the side-{n} triangle", seq.term(n),
                  counts[n])
    nonzero = [counts[n] for n in sorted(counts) if counts[n] > 0]
    valuations = [theory.two_adic_valuation(v) for v in nonzero]
    expected = appendix_values("p20_valuations")
    want = [expected[x] for x in range(len(valuations))]
    rep.check("2-adic valuations of the nonzero counts", want, valuations)
    return rep


_VERIFIERS = {1: _verify_p1, 2: _verify_p2, 3: _verify_p3, 4: _verify_p4,
              5: _verify_p5, 6: _verify_p6, 7: _verify_p7, 8: _verify_p8,
              9: _verify_p9, 10: _verify_p10, 11: _verify_p11,
              12: _verify_p12, 13: _verify_p13, 14: _verify_p14,
              19: _verify_p19, 20: _verify_p20}


def cmd_verify(args) -> int:
    if not 1 <= args.problem <= 20:
        raise ParameterError("--problem must be between 1 and 20")
    counter = _counter_from_args(args)
    if args.problem in _PADIC:
        rep = _verify_padic(args.problem, args, counter)
    else:
        rep = _VERIFIERS[args.problem](args, counter)
    return rep.emit()


# ------------------------------------------------------------------ oeis --

def cmd_oeis(args) -> int:
    seq = fetch_sequence(args.seq, offline=args.offline)
    print(f"# {seq.id} ({seq.source}), indices {seq.first_index()}.."
          f"{seq.last_index()}", file=sys.stderr)
    for n in sorted(seq.terms):
        print(n, seq.terms[n])
    return EXIT_OK


def cmd_compare(args) -> int:
    seq = fetch_sequence(args.seq, offline=args.offline)
    if args.values_from:
        text = (sys.stdin.read() if args.values_from == "-"
                else Path(args.values_from).read_text())
        values = parse_b_file(text)
    elif args.triangle_stones:
        counter = _counter_from_args(args)
        values = {0: 1, 1: 0}
        for n in range(2, args.triangle_stones + 1):
            values[n] = counter.count(triangle(n), "110")
    else:
        raise ParameterError(
            "compare needs --values-from FILE or --triangle-stones N")
    outcome = compare(seq, values)
    if outcome.agrees:
        print(f"agreement with {seq.id} over {outcome.overlap} "
              f"overlapping indices")
        return EXIT_OK
    print(f"first mismatch at index {outcome.first_mismatch}: "
          f"{seq.id} has {outcome.expected}, local value is {outcome.got}")
    return EXIT_MISMATCH


# ----------------------------------------------------------------- render --

def cmd_render(args) -> int:
    region = _region_from_args(args)
    tiles, _ = parse_tileset(args.tiles)
    picked = None
    for x, tiling in enumerate(enumerate_tilings(
            region, tiles, limit=args.index + 1,
            max_nodes=args.max_nodes, max_seconds=args.max_seconds)):
        if x == args.index:
            picked = tiling
    if picked is None:
        raise ParameterError(
            f"tiling index {args.index} is out of range for this region "
            f"and tile set")
    _emit(tiling_svg(picked), args.out)
    return EXIT_OK


# ------------------------------------------------------------------ main --

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="benzel",
        description="Exact enumeration workbench for stones-and-bones "
                    "trimer tilings of benzel and triangle regions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("region", help="list or draw a region's cells")
    _add_region_flags(p)
    p.add_argument("--format", choices=("json", "svg"), default="json")
    p.add_argument("--out", metavar="FILE", help="write to FILE instead of "
                                                 "stdout")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("count", help="count tilings of one region")
    _add_region_flags(p)
    p.add_argument("--tiles", required=True, metavar="IJK[;W]",
                   help="tile-set code, with optional stone weight")
    p.add_argument("--engine", choices=("plain", "memo"), default="memo")
    _add_cache_flags(p)
    _add_budget_flags(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="print a table of benzel counts in the "
                                     "reference layout")
    p.add_argument("--type", required=True, metavar="IJK",
                   help="tile-set code")
    p.add_argument("--max", type=int, required=True, metavar="M",
                   help="table covers 2 <= a,b <= M")
    p.add_argument("--stone-weight", type=int, metavar="W")
    p.add_argument("--engine", choices=("plain", "memo"), default="memo")
    p.add_argument("--jobs", type=int, default=1, metavar="J",
                   help="compute entries with J parallel processes")
    _add_cache_flags(p)
    _add_budget_flags(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check one numbered problem's claim "
                                      "against the engine and references")
    p.add_argument("--problem", type=int, required=True, metavar="N",
                   help="problem number, 1..20")
    p.add_argument("--n-max", type=int, metavar="N")
    p.add_argument("--k-max", type=int, metavar="K")
    p.add_argument("--a-max", type=int, metavar="A",
                   help="sweep limit for parameter sweeps")
    p.add_argument("--mod", type=int, choices=(2, 4, 8, 16, 32),
                   help="modulus for the 2-adic problems")
    p.add_argument("--max-tilings", type=int, metavar="T",
                   help="flip-graph size budget (problem 19)")
    p.add_argument("--engine", choices=("plain", "memo"), default="memo")
    p.add_argument("--no-recompute", action="store_true",
                   help="use cached counts only; fail on any cache miss")
    _add_cache_flags(p)
    _add_budget_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oeis", help="fetch a sequence's b-file (bundled "
                                    "fixtures cover offline use)")
    p.add_argument("--seq", required=True, metavar="AXXXXXX")
    p.add_argument("--offline", action="store_true",
                   help="never touch the network")
    p.set_defaults(func=cmd_oeis)

    p = sub.add_parser("compare", help="compare local values against a "
                                       "reference sequence")
    p.add_argument("--seq", required=True, metavar="AXXXXXX")
    p.add_argument("--offline", action="store_true")
    p.add_argument("--values-from", metavar="FILE",
                   help="file of 'index value' lines ('-' for stdin)")
    p.add_argument("--triangle-stones", type=int, metavar="N",
                   help="compare engine stone-tiling counts of triangles "
                        "up to side N")
    _add_cache_flags(p)
    _add_budget_flags(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("render", help="draw one tiling as SVG")
    _add_region_flags(p)
    p.add_argument("--tiles", required=True, metavar="IJK")
    p.add_argument("--index", type=int, default=0, metavar="M",
                   help="which tiling, in enumeration order (default 0)")
    p.add_argument("--out", metavar="FILE")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParameterError, TileSetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc} (nodes={exc.nodes}, "
              f"elapsed={exc.elapsed:.2f}s)", file=sys.stderr)
        return EXIT_BUDGET
    except OeisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NETWORK


if __name__ == "__main__":
    sys.exit(main())
