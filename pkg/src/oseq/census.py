"""Exact census of O-sequences by length.

count_osequences(n) is the number of sequences (1, h_1, ..., h_e) with all
entries >= 1, summing to n, that satisfy the growth condition. The counter
memoizes on (degree, last value, remaining sum): the set of admissible
continuations depends on exactly those three fields, so the state is
sufficient and shared across different n.

Key shortcut: once the current value drops to the degree or below
(last <= degree), every later value is forced nonincreasing, so the
completions of the state are just the partitions of the remaining sum into
parts <= last. That collapse is delegated to the partition engine and keeps
the active state space tiny (active degrees stay below sqrt(2n)).

An independent generate-and-test oracle (every composition, filtered by the
validity test) cross-checks the counter at desk scale; the two share no
code besides ``is_o_sequence``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .errors import EnumerationCapError, ResourceLimitError
from .macaulay import HVector, is_o_sequence, pseudopower
from .partitions import BoundedPartitionCounter

__all__ = [
    "DEFAULT_CENSUS_CEILING",
    "DEFAULT_STREAM_CAP",
    "BRUTE_FORCE_CAP",
    "CensusCounter",
    "CensusTable",
    "count_osequences",
    "enumerate_osequences",
    "brute_force_count",
    "build_census",
    "load_census_cache",
    "save_census_cache",
]

DEFAULT_CENSUS_CEILING = 200
DEFAULT_STREAM_CAP = 100_000
BRUTE_FORCE_CAP = 16

CACHE_FORMAT = "oseq-census"
CACHE_VERSION = 1


class CensusCounter:
    """Memoized counter, reusable across lengths.

    By convention no sequence sums to 0 (h_0 = 1 is mandatory), so
    ``count(0)`` is 0. Counting is single threaded and deterministic; a
    populated memo is read-only afterwards and safe to share. ``memo_limit``
    bounds the memo size by clearing it when exceeded, which changes only
    speed, never results.
    """

    def __init__(
        self,
        ceiling: int = DEFAULT_CENSUS_CEILING,
        memo_limit: int | None = None,
    ) -> None:
        if ceiling < 1:
            raise ValueError("ceiling must be positive")
        if memo_limit is not None and memo_limit < 1:
            raise ValueError("memo_limit must be positive when given")
        self.ceiling = ceiling
        self.memo_limit = memo_limit
        self._memo: dict[tuple[int, int, int], int] = {}
        self._partitions = BoundedPartitionCounter()

    def count(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"length must be nonnegative, got {n}")
        if n == 0:
            return 0
        if n > self.ceiling:
            raise ResourceLimitError(
                f"census length {n} exceeds the configured ceiling {self.ceiling}"
            )
        remaining = n - 1
        total = 1 if remaining == 0 else 0
        # h_1 is unconstrained by the growth condition.
        for h1 in range(1, remaining + 1):
            total += self._completions(1, h1, remaining - h1)
        return total

    def _completions(self, degree: int, last: int, remaining: int) -> int:
        """Ways to finish a sequence with h_degree = last and ``remaining`` to place."""
        if remaining == 0:
            return 1
        if last <= degree:
            # Tail regime: all later values are nonincreasing, so completions
            # are partitions of the remainder into parts <= last.
            return self._partitions.count(remaining, last)
        key = (degree, last, remaining)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        bound = min(remaining, pseudopower(last, degree))
        total = 0
        for nxt in range(1, bound + 1):
            total += self._completions(degree + 1, nxt, remaining - nxt)
        if self.memo_limit is not None and len(self._memo) >= self.memo_limit:
            self._memo.clear()
        self._memo[key] = total
        return total


def count_osequences(
    n: int,
    ceiling: int = DEFAULT_CENSUS_CEILING,
    counter: CensusCounter | None = None,
) -> int:
    """Exact number of O-sequences of length n."""
    if counter is None:
        counter = CensusCounter(ceiling=ceiling)
    return counter.count(n)


def enumerate_osequences(
    n: int,
    cap: int = DEFAULT_STREAM_CAP,
    counter: CensusCounter | None = None,
    ceiling: int = DEFAULT_CENSUS_CEILING,
) -> Iterator[HVector]:
    """Yield every O-sequence of length n, in lexicographic entry order.

    The exact count is computed first; if it exceeds ``cap`` the stream is
    refused with an EnumerationCapError carrying the count. No sequence of
    a fixed length is a prefix of another, so ascending choice of each next
    entry yields plain lexicographic order.
    """
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")
    if cap < 1:
        raise ValueError("cap must be positive")
    if counter is None:
        counter = CensusCounter(ceiling=ceiling)
    total = counter.count(n)
    if total > cap:
        raise EnumerationCapError(n=n, count=total, cap=cap)

    def walk(prefix: list[int], degree: int, last: int, remaining: int) -> Iterator[HVector]:
        if remaining == 0:
            yield HVector(tuple(prefix))
            return
        bound = remaining if degree == 0 else min(remaining, pseudopower(last, degree))
        for nxt in range(1, bound + 1):
            prefix.append(nxt)
            yield from walk(prefix, degree + 1, nxt, remaining - nxt)
            prefix.pop()

    return walk([1], 0, 1, n - 1)


def _compositions(total: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of positive integers summing to ``total``."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def brute_force_count(n: int, hard_cap: int = BRUTE_FORCE_CAP) -> int:
    """Count by generating every 1-prefixed composition and filtering.

    Independent oracle for the memoized counter; the 2^(n-2) compositions
    keep this to desk scale, enforced by the hard cap.
    """
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")
    if n > hard_cap:
        raise ResourceLimitError(
            f"brute-force counting of length {n} refused (hard cap {hard_cap})"
        )
    return sum(
        1 for tail in _compositions(n - 1) if is_o_sequence((1,) + tail).valid
    )


@dataclass(frozen=True)
class CensusTable:
    """Computed counts for every length 1..max_n."""

    records: dict[int, int]
    max_n: int

    def count(self, n: int) -> int:
        return self.records[n]


def load_census_cache(path: str | Path) -> tuple[dict[int, int], str | None]:
    """Read a census cache file, tolerating any corruption.

    Returns (values, problem). A missing file is not a problem; anything
    unreadable, of the wrong format, or of the wrong version yields empty
    values plus a description, and the caller rebuilds from scratch.
    """
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        return {}, None
    except OSError as exc:
        return {}, f"unreadable census cache {path}: {exc}"
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        return {}, f"corrupt census cache {path}: {exc}"
    if (
        not isinstance(data, dict)
        or data.get("format") != CACHE_FORMAT
        or data.get("version") != CACHE_VERSION
        or not isinstance(data.get("values"), dict)
    ):
        return {}, f"census cache {path} has an unrecognized format or version"
    values: dict[int, int] = {}
    for key, val in data["values"].items():
        if not (isinstance(key, str) and key.isdigit() and isinstance(val, str) and val.isdigit()):
            return {}, f"census cache {path} contains malformed entries"
        n = int(key)
        if n < 1:
            return {}, f"census cache {path} contains malformed entries"
        values[n] = int(val)
    return values, None


def save_census_cache(path: str | Path, values: dict[int, int]) -> None:
    """Write counts as decimal strings under a format-version header."""
    payload = {
        "format": CACHE_FORMAT,
        "version": CACHE_VERSION,
        "values": {str(n): str(count) for n, count in sorted(values.items())},
    }
    Path(path).write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n", encoding="utf-8")


def build_census(
    max_n: int,
    ceiling: int = DEFAULT_CENSUS_CEILING,
    cache_path: str | Path | None = None,
    counter: CensusCounter | None = None,
) -> CensusTable:
    """Compute counts for every length 1..max_n, one shared memo.

    With a cache path, previously stored values are reused and newly
    computed ones written back; a bad cache is ignored and rebuilt. Cached
    values beyond max_n are preserved on write.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    cached: dict[int, int] = {}
    if cache_path is not None:
        cached, _problem = load_census_cache(cache_path)
    if counter is None:
        counter = CensusCounter(ceiling=ceiling)
    records: dict[int, int] = {}
    for n in range(1, max_n + 1):
        if n in cached:
            records[n] = cached[n]
        else:
            records[n] = counter.count(n)
    if cache_path is not None:
        merged = dict(cached)
        merged.update(records)
        save_census_cache(cache_path, merged)
    return CensusTable(records=records, max_n=max_n)
