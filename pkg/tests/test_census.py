"""Counting and enumerating the sequences with a fixed entry total."""

from __future__ import annotations

import json

import pytest

from oseq.census import (
    CensusCounter,
    CensusTable,
    brute_force_count,
    build_census,
    count_osequences,
    enumerate_osequences,
    load_census_cache,
    save_census_cache,
)
from oseq.errors import EnumerationCapError, ResourceLimitError
from oseq.macaulay import HVector, is_o_sequence

KNOWN_COUNTS = [1, 1, 2, 3, 5, 8, 12, 18, 27, 40, 57, 82]  # n = 1..12


def compositions(total: int):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first, *rest)


def filtered_compositions(n: int) -> list[tuple[int, ...]]:
    out = [
        (1, *tail) for tail in compositions(n - 1) if is_o_sequence((1, *tail)).valid
    ]
    out.sort()
    return out


def test_small_counts():
    assert [count_osequences(n) for n in range(1, 6)] == [1, 1, 2, 3, 5]


def test_known_counts_through_twelve(census_counter):
    assert [census_counter.count(n) for n in range(1, 13)] == KNOWN_COUNTS
    assert census_counter.count(16) == 313


def test_counter_agrees_with_brute_force(census_counter):
    for n in range(1, 13):
        assert census_counter.count(n) == brute_force_count(n), n


def test_count_edge_cases():
    assert count_osequences(0) == 0
    with pytest.raises(ValueError):
        count_osequences(-1)


def test_counter_ceiling():
    counter = CensusCounter(ceiling=200)
    with pytest.raises(ResourceLimitError):
        counter.count(201)
    with pytest.raises(ValueError):
        CensusCounter(ceiling=0)


def test_brute_force_hard_cap():
    with pytest.raises(ResourceLimitError):
        brute_force_count(17)
    assert brute_force_count(17, hard_cap=17) > 0


def test_memo_eviction_changes_nothing():
    tight = CensusCounter(ceiling=60, memo_limit=10)
    loose = CensusCounter(ceiling=60)
    for n in range(1, 26):
        assert tight.count(n) == loose.count(n)


def test_enumerate_smallest_cases():
    assert [tuple(h) for h in enumerate_osequences(1)] == [(1,)]
    assert [tuple(h) for h in enumerate_osequences(2)] == [(1, 1)]
    assert [tuple(h) for h in enumerate_osequences(4)] == [
        (1, 1, 1, 1),
        (1, 2, 1),
        (1, 3),
    ]


def test_enumerate_yields_hvectors_in_lex_order(census_counter):
    for n in range(1, 11):
        seen = list(enumerate_osequences(n, counter=census_counter))
        assert all(isinstance(h, HVector) for h in seen)
        tuples = [tuple(h) for h in seen]
        assert tuples == sorted(tuples)
        assert len(set(tuples)) == len(tuples)
        assert all(sum(t) == n for t in tuples)


def test_enumerate_matches_composition_filter(census_counter):
    for n in range(1, 13):
        expected = filtered_compositions(n)
        got = [tuple(h) for h in enumerate_osequences(n, counter=census_counter)]
        assert got == expected
        assert len(got) == census_counter.count(n)


def test_enumerate_cap_refusal(census_counter):
    with pytest.raises(EnumerationCapError) as excinfo:
        enumerate_osequences(12, cap=10, counter=census_counter)
    err = excinfo.value
    assert err.n == 12
    assert err.count == 82
    assert err.cap == 10
    assert isinstance(err, ResourceLimitError)


def test_enumerate_cap_checked_before_streaming():
    # the refusal happens at call time, not on first iteration
    with pytest.raises(EnumerationCapError):
        enumerate_osequences(10, cap=1)


def test_count_monotone_in_total(census_table):
    for n in range(1, census_table.max_n):
        assert census_table.count(n + 1) >= census_table.count(n)


def test_lower_bound_and_first_strict_excess(census_table, partition_table):
    for n in range(1, 41):
        assert census_table.count(n) >= partition_table.p(n - 1)
    first_strict = next(
        n for n in range(1, 41) if census_table.count(n) > partition_table.p(n - 1)
    )
    assert first_strict == 6
    assert census_table.count(6) == 8
    assert partition_table.p(5) == 7


def test_census_table_shape(census_table):
    assert isinstance(census_table, CensusTable)
    assert census_table.max_n == 60
    assert sorted(census_table.records) == list(range(1, 61))


# ---------------------------------------------------------------------------
# cache file handling


def test_cache_roundtrip(tmp_path):
    path = tmp_path / "census.json"
    save_census_cache(path, {3: 2, 12: 82, 40: 10**30})
    values, problem = load_census_cache(path)
    assert problem is None
    assert values == {3: 2, 12: 82, 40: 10**30}


def test_cache_missing_file_is_fine(tmp_path):
    values, problem = load_census_cache(tmp_path / "absent.json")
    assert values == {}
    assert problem is None


@pytest.mark.parametrize(
    "text",
    [
        "not json at all {",
        json.dumps([1, 2, 3]),
        json.dumps({"format": "something-else", "version": 1, "values": {}}),
        json.dumps({"format": "oseq-census", "version": 99, "values": {}}),
        json.dumps({"format": "oseq-census", "version": 1, "values": {"3": "two"}}),
        json.dumps({"format": "oseq-census", "version": 1, "values": ["3", "2"]}),
    ],
)
def test_cache_rejects_malformed_content(tmp_path, text):
    path = tmp_path / "census.json"
    path.write_text(text, encoding="utf-8")
    values, problem = load_census_cache(path)
    assert values == {}
    assert problem is not None


def test_build_census_writes_and_reuses_cache(tmp_path):
    path = tmp_path / "census.json"
    table = build_census(8, cache_path=path)
    assert [table.count(n) for n in range(1, 9)] == KNOWN_COUNTS[:8]
    values, problem = load_census_cache(path)
    assert problem is None
    assert values[8] == KNOWN_COUNTS[7]

    # cached values are trusted as-is, so a planted value proves reuse
    save_census_cache(path, {5: 999, 50: 123})
    table = build_census(5, cache_path=path)
    assert table.count(5) == 999
    assert table.count(4) == KNOWN_COUNTS[3]

    # rewriting the cache keeps entries beyond the requested range
    values, _ = load_census_cache(path)
    assert values[50] == 123


def test_build_census_survives_corrupt_cache(tmp_path):
    path = tmp_path / "census.json"
    path.write_text("garbage", encoding="utf-8")
    table = build_census(6, cache_path=path)
    assert [table.count(n) for n in range(1, 7)] == KNOWN_COUNTS[:6]
    values, problem = load_census_cache(path)
    assert problem is None
    assert values[6] == KNOWN_COUNTS[5]


def test_build_census_without_cache_matches(census_table):
    table = build_census(10)
    assert all(table.count(n) == census_table.count(n) for n in range(1, 11))
