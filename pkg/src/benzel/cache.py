"""Append-only JSONL result cache with a single-writer lock.

One JSON object per line, schema_version 1.  Records are keyed by (region,
tileset); re-writes append rather than rewrite, and readers let the latest
record win.  Corrupted lines are skipped with a warning so a torn write can
never poison the store.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from filelock import FileLock

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
ENV_VAR = "BENZEL_CACHE"
DEFAULT_FILENAME = "benzel-cache.jsonl"


def resolve_path(explicit: str | os.PathLike | None = None) -> Path:
    """Cache location: explicit flag, then $BENZEL_CACHE, then ./benzel-cache.jsonl."""
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.cwd() / DEFAULT_FILENAME


@dataclass(frozen=True)
class CacheRecord:
    region: tuple  # ("benzel", a, b) or ("triangle", n)
    tileset: str  # code with optional weight suffix, e.g. "113" or "113;3"
    count: int
    engine: str  # "plain" or "memo"
    elapsed_ms: int
    created_at: str
    schema_version: int = SCHEMA_VERSION

    def key(self) -> tuple:
        return (self.region, self.tileset)

    def to_json(self) -> str:
        return json.dumps({
            "schema_version": self.schema_version,
            "region": list(self.region),
            "tileset": self.tileset,
            "count": str(self.count),
            "engine": self.engine,
            "elapsed_ms": self.elapsed_ms,
            "created_at": self.created_at,
        }, sort_keys=True)


def _record_from_json(obj) -> CacheRecord:
    region = tuple(obj["region"])
    if not (region and isinstance(region[0], str)
            and all(isinstance(p, int) for p in region[1:])):
        raise ValueError(f"bad region {region!r}")
    count_text = obj["count"]
    if not (isinstance(count_text, str) and count_text.isdigit()):
        raise ValueError(f"count must be a decimal string, got {count_text!r}")
    if obj["schema_version"] != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {obj['schema_version']!r}")
    return CacheRecord(region=region, tileset=str(obj["tileset"]),
                       count=int(count_text), engine=str(obj["engine"]),
                       elapsed_ms=int(obj["elapsed_ms"]),
                       created_at=str(obj["created_at"]))


def now_timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class Cache:
    """A JSONL cache file plus its lock; safe for concurrent appenders."""

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = resolve_path(path)
        self._lock = FileLock(str(self.path) + ".lock")

    def read_all(self) -> dict[tuple, CacheRecord]:
        """All records, latest-wins; corrupted lines are logged and skipped."""
        records: dict[tuple, CacheRecord] = {}
        if not self.path.is_file():
            return records
        with open(self.path, encoding="utf-8") as f:
            for lineno, line in enumerate(f, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = _record_from_json(json.loads(line))
                except (ValueError, KeyError, TypeError) as exc:
                    log.warning("skipping corrupted cache line %d in %s: %s",
                                lineno, self.path, exc)
                    continue
                records[rec.key()] = rec
        return records

    def lookup(self, region: tuple, tileset: str) -> CacheRecord | None:
        return self.read_all().get((tuple(region), tileset))

    def store(self, record: CacheRecord) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self._lock:
            with open(self.path, "a", encoding="utf-8") as f:
                f.write(record.to_json() + "\n")

    def store_count(self, region: tuple, tileset: str, count: int,
                    engine: str, elapsed_seconds: float) -> CacheRecord:
        rec = CacheRecord(region=tuple(region), tileset=tileset, count=count,
                          engine=engine,
                          elapsed_ms=int(elapsed_seconds * 1000),
                          created_at=now_timestamp())
        self.store(rec)
        return rec


def tileset_key(code: str, stone_weight: int = 1) -> str:
    """Canonical tileset cache key: bare code, or code;weight when weighted."""
    return code if stone_weight == 1 else f"{code};{stone_weight}"
