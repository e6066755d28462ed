#!/usr/bin/env python3
"""Reproduce the extremal-sequence table and the index-bound tables.

Usage:
    python scripts/reproduce_tables.py [--n N] [--alpha A] [--verify]

Prints, for each cyclomatic number c = 0..6 at order N (default 11):
  * the maximal and minimal degree sequences of the class,
  * the inverse-degree closed-form bounds and the refined upper bound,
  * the general-Zagreb bounds at the chosen exponent (default 2),
with an optional exhaustive-enumeration verdict per row.
"""

import argparse
import sys

from ccyclic.bounds import (
    annotate_orientation,
    bounds,
    closed_form_inverse_degree,
    refined_inverse_degree_upper,
    verify_bounds,
)
from ccyclic.degree_sequences import CyclomaticClass, extremal_family
from ccyclic.formatting import format_index_value, format_sequence
from ccyclic.indices import IndexSpec


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=11)
    parser.add_argument("--alpha", type=int, default=2)
    parser.add_argument("--verify", action="store_true",
                        help="compare each bound against exhaustive enumeration")
    parser.add_argument("--cap", type=int, default=12)
    args = parser.parse_args(argv)

    print(f"extremal degree sequences at n={args.n}")
    print("-" * 72)
    for c in range(7):
        family = extremal_family(CyclomaticClass(c=c, n=args.n))
        tops = ", ".join(format_sequence(seq) for seq in family.maximals)
        print(f"c={c}  maximal: {tops}")
        print(f"      minimal: {format_sequence(family.minimal)}")

    rho = IndexSpec.inverse_degree()
    print()
    print(f"inverse-degree bounds at n={args.n}")
    print("-" * 72)
    for c in range(7):
        klass = CyclomaticClass(c=c, n=args.n)
        closed = closed_form_inverse_degree(klass)
        line = (
            f"c={c}  {format_index_value(closed.lower)} <= rho <= "
            f"{format_index_value(closed.upper)}"
        )
        if c >= 3:
            refined = refined_inverse_degree_upper(klass)
            line += f"  [refined upper {format_index_value(refined)}]"
        if args.verify:
            line += f"  ({verify_bounds(klass, rho, args.cap).status})"
        print(line)

    index = IndexSpec.general_zagreb(args.alpha)
    print()
    print(f"general-Zagreb bounds at n={args.n}, alpha={args.alpha}")
    print("-" * 72)
    for c in range(1, 7):
        klass = CyclomaticClass(c=c, n=args.n)
        row = annotate_orientation(bounds(klass, index))
        line = (
            f"c={c}  lower {format_index_value(row.lower)} at "
            f"{format_sequence(row.lower_attainer)}; upper "
            f"{format_index_value(row.upper)} at {format_sequence(row.upper_attainer)}"
        )
        if args.verify:
            line += f"  ({verify_bounds(klass, index, args.cap).status})"
        print(line)
        for note in row.notes:
            print(f"      note: {note}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
