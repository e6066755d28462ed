#!/usr/bin/env python3
"""Probe whether the closed-form extremal patterns survive beyond six cycles.

Usage:
    python scripts/conjecture_scan.py [--c-max C] [--n-max N]

For each c up to C (default 9) and each feasible order up to N (default 12),
enumerates every graphical degree sequence with sum 2(n + c - 1) and checks
that no sequence strictly majorizes a closed-form maximal pattern and that
the balanced minimal pattern minorizes everything.  For c <= 6 these are
theorems; beyond that the scan reports conjecture status.
"""

import argparse
import sys

from ccyclic.degree_sequences import check_pattern_extremality, min_order
from ccyclic.formatting import format_sequence
from ccyclic.degree_sequences import parametric_extremal_family


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--c-max", type=int, default=9)
    parser.add_argument("--n-max", type=int, default=12)
    parser.add_argument("--cap", type=int, default=14)
    args = parser.parse_args(argv)

    failures = 0
    for c in range(7, args.c_max + 1):
        for n in range(min_order(c), args.n_max + 1):
            patterns = parametric_extremal_family(c, n)
            if not patterns.maximals and patterns.minimal is None:
                continue
            report = check_pattern_extremality(c, n, cap=args.cap)
            status = "holds" if report.ok else "FAILS"
            if not report.ok:
                failures += 1
            print(
                f"c={c} n={n}: {len(patterns.maximals)} maximal patterns, "
                f"minimal {'yes' if patterns.minimal else 'no'}, "
                f"{report.sequence_count} sequences: {status}"
            )
            for pattern, witness in report.dominated_patterns:
                print(
                    f"    {format_sequence(pattern)} strictly majorized by "
                    f"{format_sequence(witness)}"
                )
            for seq in report.not_above_minimal[:3]:
                print(f"    minimal fails below {format_sequence(seq)}")
    print(f"done; {failures} failing (c, n) pairs")
    return 0


if __name__ == "__main__":
    sys.exit(main())
