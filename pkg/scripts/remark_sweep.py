"""Structural sweep over every O-sequence with a small entry total.

Usage:
    python scripts/remark_sweep.py --max-n 12

For each total n this enumerates all L(n) sequences and reports how many
satisfy the two structure checks (nonincreasing tail after the critical
index, critical index below sqrt(2n)) and how often the staircase
monotonicity diagnostics hold on the pre-critical window. The structure
checks are theorems and should sit at 100%; the staircase flags are only
guaranteed asymptotically, so their rates are the interesting output.
"""

from __future__ import annotations

import argparse
import sys

from oseq.bounds import check_prefix_bound, remark_profile, verify_tail_partition
from oseq.census import CensusCounter, enumerate_osequences


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=12, dest="max_n")
    args = parser.parse_args()

    counter = CensusCounter(ceiling=max(args.max_n, 1))
    header = (
        f"{'n':>3} {'L(n)':>8} {'tail ok':>8} {'prefix ok':>9} "
        f"{'t monotone':>11} {'alpha monotone':>15}"
    )
    print(header)
    for n in range(1, args.max_n + 1):
        total = tail_ok = prefix_ok = t_ok = alpha_ok = 0
        for h in enumerate_osequences(n, counter=counter, cap=10**7):
            total += 1
            tail_ok += verify_tail_partition(h)
            prefix_ok += check_prefix_bound(h)
            profile = remark_profile(h)
            t_ok += profile.t_monotone
            alpha_ok += profile.alpha_monotone_within_t_plateaus

        def pct(k: int) -> str:
            return f"{100.0 * k / total:>6.1f}%"

        print(
            f"{n:>3} {total:>8} {pct(tail_ok):>8} {pct(prefix_ok):>9} "
            f"{pct(t_ok):>11} {pct(alpha_ok):>15}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
