"""Exact integer partition counting and the Hardy-Ramanujan estimate.

p(n) counts all partitions of n, q(n) the partitions into distinct parts.
Tables are exact big integers; the asymptotic estimate is the only place
floating point appears, and it offers a log-space mode so the pipeline
stays total when e^(pi*sqrt(2n/3)) would overflow a double.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import IO, NamedTuple

from .errors import ResourceLimitError, TheoremViolationError

__all__ = [
    "DEFAULT_TABLE_LIMIT",
    "PartitionTable",
    "AsymptoticEstimate",
    "PQCheck",
    "build_partition_table",
    "hardy_ramanujan",
    "check_pq_inequality",
    "BoundedPartitionCounter",
]

DEFAULT_TABLE_LIMIT = 100_000


@dataclass(frozen=True)
class PartitionTable:
    """Exact values p(0..limit) and q(0..limit)."""

    limit: int
    p_values: tuple[int, ...]
    q_values: tuple[int, ...]

    def p(self, n: int) -> int:
        return self.p_values[n]

    def q(self, n: int) -> int:
        return self.q_values[n]

    def write_csv(self, stream: IO[str]) -> None:
        """Rows n,p,q with plain decimal digits (never scientific notation)."""
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["n", "p", "q"])
        for n in range(self.limit + 1):
            writer.writerow([n, str(self.p_values[n]), str(self.q_values[n])])


def build_partition_table(limit: int, max_limit: int = DEFAULT_TABLE_LIMIT) -> PartitionTable:
    """Tabulate p and q up to ``limit``.

    p uses Euler's pentagonal-number recurrence, q the parts-distinct
    dynamic program. Refuses limits above ``max_limit``.
    """
    if limit < 0:
        raise ValueError(f"table limit must be >= 0, got {limit}")
    if limit > max_limit:
        raise ResourceLimitError(
            f"partition table limit {limit} exceeds the configured maximum {max_limit}"
        )

    p = [0] * (limit + 1)
    p[0] = 1
    for n in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            g = k * (3 * k - 1) // 2
            if g > n:
                break
            term = p[n - g]
            g2 = g + k  # k*(3k+1)/2, the paired pentagonal number
            if g2 <= n:
                term += p[n - g2]
            total += term if k % 2 == 1 else -term
            k += 1
        p[n] = total

    # q via the 0/1 knapsack over parts: descending inner loop uses each part once.
    q = [0] * (limit + 1)
    q[0] = 1
    for part in range(1, limit + 1):
        for s in range(limit, part - 1, -1):
            q[s] += q[s - part]

    return PartitionTable(limit=limit, p_values=tuple(p), q_values=tuple(q))


@dataclass(frozen=True)
class AsymptoticEstimate:
    """Hardy-Ramanujan estimate for p(n), optionally in log space.

    ``ratio`` is p(n)/estimate when an exact table covering n was supplied;
    it is computed through logarithms so it stays finite even when the
    plain-space estimate would overflow.
    """

    n: int
    estimate: float
    log_space: bool
    ratio: float | None


def hardy_ramanujan(
    n: int,
    table: PartitionTable | None = None,
    log_space: bool = False,
) -> AsymptoticEstimate:
    """Evaluate the estimate (1/(4n*sqrt(3))) * e^(pi*sqrt(2n/3)).

    With ``log_space`` the natural log of that value is returned instead,
    which never overflows. Without it, an OverflowError is raised once the
    exponent exceeds double range.
    """
    if n < 1:
        raise ValueError(f"the estimate is defined for n >= 1, got {n}")
    log_estimate = math.pi * math.sqrt(2.0 * n / 3.0) - math.log(4.0 * n * math.sqrt(3.0))
    if log_space:
        estimate = log_estimate
    else:
        if log_estimate > math.log(1.7976931348623157e308):
            raise OverflowError(
                f"estimate for n={n} exceeds double range; use log_space"
            )
        estimate = math.exp(log_estimate)
    ratio: float | None = None
    if table is not None and n <= table.limit:
        # math.log on a big int keeps full magnitude, so this works for any n.
        ratio = math.exp(math.log(table.p_values[n]) - log_estimate)
    return AsymptoticEstimate(n=n, estimate=estimate, log_space=log_space, ratio=ratio)


class PQCheck(NamedTuple):
    n: int
    p_prev: int
    q_n: int
    strict: bool


def check_pq_inequality(limit: int, table: PartitionTable | None = None) -> list[PQCheck]:
    """Compare p(n-1) against q(n) for every 1 <= n <= limit.

    p(n-1) >= q(n) always, strictly exactly when n >= 4; both facts are
    theorems, so any violation raises TheoremViolationError (a bug, not
    bad input).
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if table is None or table.limit < limit:
        table = build_partition_table(limit)
    results: list[PQCheck] = []
    for n in range(1, limit + 1):
        p_prev = table.p_values[n - 1]
        q_n = table.q_values[n]
        if p_prev < q_n:
            raise TheoremViolationError(
                f"p(n-1) >= q(n) failed at n={n}: {p_prev} < {q_n}", n=n
            )
        strict = p_prev > q_n
        if strict != (n >= 4):
            raise TheoremViolationError(
                f"strictness of p(n-1) > q(n) is wrong at n={n}: "
                f"p={p_prev}, q={q_n}", n=n
            )
        results.append(PQCheck(n=n, p_prev=p_prev, q_n=q_n, strict=strict))
    return results


class BoundedPartitionCounter:
    """Partitions of a total into parts of bounded size, lazily tabulated.

    ``count(total, max_part)`` is the number of partitions of ``total``
    whose parts are all <= ``max_part`` (1 for total 0, the empty
    partition). The table grows geometrically on demand; a completed table
    is only ever read, so sharing one counter across readers is safe.
    """

    def __init__(self) -> None:
        # _rows[m][t] = partitions of t with parts <= m
        self._rows: list[list[int]] = [[1]]

    def count(self, total: int, max_part: int) -> int:
        if total < 0:
            return 0
        if total == 0:
            return 1
        m = min(max_part, total)
        if m <= 0:
            return 0
        self._reserve(m, total)
        return self._rows[m][total]

    def _reserve(self, max_part: int, total: int) -> None:
        have_m = len(self._rows) - 1
        have_t = len(self._rows[0]) - 1
        if max_part <= have_m and total <= have_t:
            return
        new_m = max(max_part, 2 * have_m)
        new_t = max(total, 2 * have_t)
        rows = [[1] + [0] * new_t]
        for part in range(1, new_m + 1):
            row = rows[part - 1][:]
            for s in range(part, new_t + 1):
                row[s] += row[s - part]
            rows.append(row)
        self._rows = rows
