"""End-to-end coverage of the command-line interface.

Commands run in-process through main(), with the cache redirected to a
temporary file by the cache_path fixture.
"""

import json
from pathlib import Path

import pytest

from benzel.cache import Cache
from benzel.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_region_json_smallest(capsys, cache_path):
    rc, out, _ = run(capsys, "region", "--a", "2", "--b", "2",
                     "--format", "json")
    assert rc == 0
    assert json.loads(out) == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]


def test_region_json_cell_count(capsys, cache_path):
    rc, out, _ = run(capsys, "region", "--a", "4", "--b", "6")
    assert rc == 0
    assert len(json.loads(out)) == 18


def test_region_svg_to_file(capsys, cache_path, tmp_path):
    target = tmp_path / "r.svg"
    rc, out, _ = run(capsys, "region", "--a", "3", "--b", "3",
                     "--format", "svg", "--out", str(target))
    assert rc == 0
    assert target.read_text().startswith("<svg ")
    assert out == ""


def test_count_simple(capsys, cache_path):
    rc, out, _ = run(capsys, "count", "--a", "7", "--b", "7",
                     "--tiles", "103")
    assert rc == 0
    assert out.strip() == "666"


def test_count_weighted(capsys, cache_path):
    rc, out, _ = run(capsys, "count", "--a", "6", "--b", "8",
                     "--tiles", "113;3")
    assert rc == 0
    assert out.strip() == "3267540"


def test_count_triangle(capsys, cache_path):
    rc, out, _ = run(capsys, "count", "--triangle", "9", "--tiles", "110")
    assert rc == 0
    assert out.strip() == "2"


def test_count_writes_then_reads_the_cache(capsys, cache_path):
    run(capsys, "count", "--a", "6", "--b", "6", "--tiles", "112")
    rec = Cache(cache_path).lookup(("benzel", 6, 6), "112")
    assert rec is not None and rec.count == 48

    # Poison the cache to prove the read path is hit on the second run.
    Cache(cache_path).store_count(("benzel", 6, 6), "112", 999, "memo", 0.0)
    rc, out, _ = run(capsys, "count", "--a", "6", "--b", "6",
                     "--tiles", "112")
    assert rc == 0 and out.strip() == "999"

    rc, out, _ = run(capsys, "count", "--a", "6", "--b", "6",
                     "--tiles", "112", "--no-cache")
    assert rc == 0 and out.strip() == "48"


def test_count_cache_key_respects_weight(capsys, cache_path):
    run(capsys, "count", "--a", "6", "--b", "6", "--tiles", "113")
    rc, out, _ = run(capsys, "count", "--a", "6", "--b", "6",
                     "--tiles", "113;3")
    assert out.strip() == "73467"
    cache = Cache(cache_path)
    assert cache.lookup(("benzel", 6, 6), "113").count == 459
    assert cache.lookup(("benzel", 6, 6), "113;3").count == 73467


def test_count_rejects_degenerate_parameters(capsys, cache_path):
    rc, _, err = run(capsys, "count", "--a", "1", "--b", "1",
                     "--tiles", "110")
    assert rc == 2
    assert "error" in err


def test_count_rejects_unknown_code(capsys, cache_path):
    rc, _, err = run(capsys, "count", "--a", "4", "--b", "4",
                     "--tiles", "225")
    assert rc == 2


def test_count_budget_exit_code(capsys, cache_path):
    rc, _, err = run(capsys, "count", "--a", "8", "--b", "8",
                     "--tiles", "113", "--max-nodes", "50", "--no-cache")
    assert rc == 3
    assert "budget" in err


def test_region_needs_parameters(capsys, cache_path):
    rc, _, err = run(capsys, "region", "--a", "4")
    assert rc == 2
    rc, _, err = run(capsys, "region", "--a", "4", "--b", "6",
                     "--triangle", "5")
    assert rc == 2


def test_table_bones_only_layout(capsys, cache_path):
    rc, out, _ = run(capsys, "table", "--type", "003", "--max", "8")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0].split() == ["a\\b", "2", "3", "4", "5", "6", "7", "8"]
    grid = {}
    for line in lines[1:]:
        tokens = line.split()
        a = int(tokens[0])
        cols = [b for b in range(2, 9) if 2 * b - 2 >= a and b <= 2 * a - 2]
        assert len(cols) == len(tokens) - 1
        for b, tok in zip(cols, tokens[1:]):
            grid[a, b] = int(tok)
    assert grid[5, 7] == 2 and grid[7, 5] == 2
    assert all(v == 0 for (a, b), v in grid.items() if (a, b) not in
               {(5, 7), (7, 5)})
    assert (2, 5) not in grid  # blank outside the canonical cone


def test_table_matches_direct_counts(capsys, cache_path):
    from benzel.engine import T
    rc, out, _ = run(capsys, "table", "--type", "112", "--max", "7")
    assert rc == 0
    for line in out.splitlines()[1:]:
        tokens = line.split()
        a = int(tokens[0])
        cols = [b for b in range(2, 8) if 2 * b - 2 >= a and b <= 2 * a - 2]
        for b, tok in zip(cols, tokens[1:]):
            assert int(tok) == T(1, 1, 2, a, b)


def test_table_parallel_jobs_agree(capsys, cache_path):
    rc, serial, _ = run(capsys, "table", "--type", "013", "--max", "7",
                        "--no-cache")
    rc2, parallel, _ = run(capsys, "table", "--type", "013", "--max", "7",
                           "--no-cache", "--jobs", "3")
    assert rc == rc2 == 0
    assert serial == parallel


def test_table_budget_marks_unknown_entries(capsys, cache_path):
    rc, out, err = run(capsys, "table", "--type", "113", "--max", "9",
                       "--no-cache", "--max-nodes", "2000")
    assert rc == 3
    assert "?" in out
    assert "budget" in err


def test_table_reuses_cached_entries(capsys, cache_path):
    Cache(cache_path).store_count(("benzel", 2, 2), "113", 777, "memo", 0.0)
    rc, out, _ = run(capsys, "table", "--type", "113", "--max", "3")
    assert rc == 0
    assert out.splitlines()[1].split() == ["2", "777"]


def test_verify_problem_six(capsys, cache_path):
    rc, out, err = run(capsys, "verify", "--problem", "6")
    assert rc == 0
    report = json.loads(out)
    assert report["problem"] == 6
    assert report["passed"] is True
    assert all(c["status"] in ("pass", "info") for c in report["checks"])
    assert "problem 6: pass" in err


def test_verify_problem_one_skips_transposed_special_pairs(capsys,
                                                           cache_path):
    rc, out, _ = run(capsys, "verify", "--problem", "1", "--a-max", "8")
    assert rc == 0
    report = json.loads(out)
    names = [c["name"] for c in report["checks"]]
    assert not any(name.startswith("T_003(5,7)") and "= 0" in name
                   for name in names)


def test_verify_problem_twelve_reads_reference_sequence(capsys, cache_path):
    rc, out, _ = run(capsys, "verify", "--problem", "12", "--n-max", "3")
    assert rc == 0
    report = json.loads(out)
    assert any("reference sequence" in c["name"] for c in report["checks"])


def test_verify_padic_problem(capsys, cache_path):
    rc, out, _ = run(capsys, "verify", "--problem", "15", "--n-max", "6")
    assert rc == 0
    report = json.loads(out)
    assert any("mod-16" in c["name"] for c in report["checks"])
    assert any("constant mod 2" in c["name"] for c in report["checks"])


def test_verify_mismatch_exits_one(capsys, cache_path, monkeypatch):
    import benzel.cli as cli

    real = cli.appendix_values

    def poisoned(key):
        values = dict(real(key))
        values[2] = values[2] + 1
        return values

    monkeypatch.setattr(cli, "appendix_values", poisoned)
    rc, out, err = run(capsys, "verify", "--problem", "2", "--n-max", "2")
    assert rc == 1
    assert "FAIL" in err
    report = json.loads(out)
    assert report["passed"] is False
    assert any(c["status"] == "fail" for c in report["checks"])


def test_verify_no_recompute_needs_a_warm_cache(capsys, cache_path):
    rc, _, err = run(capsys, "verify", "--problem", "6", "--no-recompute")
    assert rc == 3
    assert "no cached count" in err

    assert run(capsys, "verify", "--problem", "6")[0] == 0
    rc, out, _ = run(capsys, "verify", "--problem", "6", "--no-recompute")
    assert rc == 0
    assert json.loads(out)["passed"] is True


def test_verify_rejects_out_of_range_problem(capsys, cache_path):
    rc, _, _ = run(capsys, "verify", "--problem", "21")
    assert rc == 2


def test_oeis_offline_prints_terms(capsys, cache_path):
    rc, out, err = run(capsys, "oeis", "--seq", "A006318", "--offline")
    assert rc == 0
    assert "3 22" in out.splitlines()
    assert "fixture" in err


def test_oeis_unknown_sequence_offline(capsys, cache_path):
    rc, _, err = run(capsys, "oeis", "--seq", "A000001", "--offline")
    assert rc == 4


def test_compare_from_file(capsys, cache_path, tmp_path):
    values = tmp_path / "vals.txt"
    values.write_text("0 1\n1 2\n2 6\n3 21\n")
    rc, out, _ = run(capsys, "compare", "--seq", "A006318", "--offline",
                     "--values-from", str(values))
    assert rc == 1
    assert "index 3" in out and "22" in out and "21" in out


def test_compare_triangle_stone_counts(capsys, cache_path):
    rc, out, _ = run(capsys, "compare", "--seq", "A334875", "--offline",
                     "--triangle-stones", "12")
    assert rc == 0
    assert "agreement" in out


def test_compare_needs_a_source(capsys, cache_path):
    rc, _, err = run(capsys, "compare", "--seq", "A006318", "--offline")
    assert rc == 2


def test_render_matches_golden(capsys, cache_path, tmp_path):
    golden = Path(__file__).parent / "golden" / "benzel_3_3_full_index0.svg"
    target = tmp_path / "t.svg"
    rc, _, _ = run(capsys, "render", "--a", "3", "--b", "3",
                   "--tiles", "113", "--index", "0", "--out", str(target))
    assert rc == 0
    assert target.read_text() == golden.read_text()


def test_render_index_out_of_range(capsys, cache_path):
    rc, _, err = run(capsys, "render", "--a", "4", "--b", "6",
                     "--tiles", "110", "--index", "5")
    assert rc == 2
    assert "out of range" in err


def test_missing_subcommand_is_a_usage_error(capsys, cache_path):
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2
