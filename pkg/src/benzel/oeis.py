"""Minimal OEIS b-file client with bundled offline fixtures.

A b-file is plain text: optional comment lines starting with '#', then one
"index value" pair per line with contiguous indices.  Sequences A006318,
A006319 and A334875 ship as fixtures under fixtures/oeis/ so everything can
run without network access.
"""

from __future__ import annotations

import re
import urllib.error
import urllib.request
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple

_ID_PATTERN = re.compile(r"\AA\d{6,7}\Z")

FIXTURE_DIR = Path(__file__).parent / "fixtures" / "oeis"

DEFAULT_TIMEOUT = 15.0


class OeisError(RuntimeError):
    """Network failure without a usable fixture, or a malformed id/b-file."""


@dataclass(frozen=True)
class OeisSequence:
    id: str
    terms: dict[int, int]
    source: str  # "network" or "fixture"

    def first_index(self) -> int:
        return min(self.terms)

    def last_index(self) -> int:
        return max(self.terms)

    def term(self, n: int) -> int:
        return self.terms[n]


def normalize_id(seq_id: str) -> str:
    seq_id = seq_id.strip().upper()
    if not _ID_PATTERN.match(seq_id):
        raise OeisError(f"malformed OEIS id {seq_id!r} (expected Annnnnn)")
    return seq_id


def b_file_url(seq_id: str) -> str:
    seq_id = normalize_id(seq_id)
    return f"https://oeis.org/{seq_id}/b{seq_id[1:]}.txt"


def parse_b_file(text: str) -> dict[int, int]:
    """Parse b-file text into {index: value}; indices must be contiguous."""
    terms: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise OeisError(f"b-file line {lineno} is not an 'index value' "
                            f"pair: {raw!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise OeisError(f"b-file line {lineno} holds non-integers: "
                            f"{raw!r}") from None
        if index in terms:
            raise OeisError(f"b-file repeats index {index}")
        terms[index] = value
    if not terms:
        raise OeisError("b-file contains no terms")
    lo, hi = min(terms), max(terms)
    if len(terms) != hi - lo + 1:
        missing = next(n for n in range(lo, hi + 1) if n not in terms)
        raise OeisError(f"b-file indices are not contiguous (missing "
                        f"{missing})")
    return terms


def fixture_path(seq_id: str) -> Path:
    seq_id = normalize_id(seq_id)
    return FIXTURE_DIR / f"b{seq_id[1:]}.txt"


def bundled_sequence(seq_id: str) -> OeisSequence:
    """Load a sequence from the bundled fixtures, or raise OeisError."""
    seq_id = normalize_id(seq_id)
    path = fixture_path(seq_id)
    if not path.is_file():
        raise OeisError(f"no bundled fixture for {seq_id} (looked for "
                        f"{path.name} in {path.parent})")
    return OeisSequence(id=seq_id, terms=parse_b_file(path.read_text()),
                        source="fixture")


def fetch_sequence(seq_id: str, offline: bool = False,
                   timeout: float = DEFAULT_TIMEOUT) -> OeisSequence:
    """Fetch a sequence's b-file, falling back to the bundled fixture.

    With offline=True the network is never touched.  A network failure for
    a sequence without a fixture raises OeisError naming the missing file.
    """
    seq_id = normalize_id(seq_id)
    if not offline:
        try:
            with urllib.request.urlopen(b_file_url(seq_id),
                                        timeout=timeout) as resp:
                text = resp.read().decode("utf-8", errors="replace")
            return OeisSequence(id=seq_id, terms=parse_b_file(text),
                                source="network")
        except (urllib.error.URLError, OSError, OeisError):
            pass
    try:
        return bundled_sequence(seq_id)
    except OeisError:
        mode = "offline mode and" if offline else "network fetch failed and"
        raise OeisError(f"{mode} no fixture b{seq_id[1:]}.txt is bundled "
                        f"for {seq_id}") from None


class Comparison(NamedTuple):
    """Result of comparing local values against a sequence's overlap."""

    overlap: int
    first_mismatch: int | None
    expected: int | None
    got: int | None

    @property
    def agrees(self) -> bool:
        return self.first_mismatch is None


def compare(seq: OeisSequence,
            values: Mapping[int, int] | Iterable[tuple[int, int]]
            ) -> Comparison:
    """First mismatch index (with both sides) or full agreement over the
    indices common to the sequence and the given values."""
    if not isinstance(values, Mapping):
        values = dict(values)
    overlap = sorted(set(seq.terms) & set(values))
    for n in overlap:
        if seq.terms[n] != values[n]:
            return Comparison(overlap=len(overlap), first_mismatch=n,
                              expected=seq.terms[n], got=values[n])
    return Comparison(overlap=len(overlap), first_mismatch=None,
                      expected=None, got=None)
