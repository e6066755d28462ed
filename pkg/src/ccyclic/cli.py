"""Command line interface: extremal families, index bounds, verification, realization.

Exit codes: 0 success, 1 domain or usage error, 2 verification mismatch,
3 enumeration cap exceeded.  All output is deterministic byte for byte for a
given invocation; exact rationals render as ``p/q`` with a 12-significant-
digit decimal alongside.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .bounds import (
    EXACT_MATCH,
    MISMATCH,
    SKIPPED,
    annotate_orientation,
    bounds,
    refined_inverse_degree_upper,
    report_to_json_dict,
    reports_to_csv,
    verify_bounds,
    with_verification,
)
from .degree_sequences import (
    DEFAULT_ENUMERATION_CAP,
    CyclomaticClass,
    EnumerationCapError,
    candidate_sequences,
    check_family_extremality,
    check_pattern_extremality,
    extremal_family,
    is_ccyclic_sequence,
    is_ccyclic_sequence_via_inequalities,
    is_graphical,
    min_order,
)
from .formatting import format_index_value, format_sequence, plain_sequence
from .indices import IndexSpec, SchurClass
from .realization import cyclomatic_number, export_dot, realize

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_CAP = 3

VERIFY_INDICES = (
    IndexSpec.inverse_degree(),
    IndexSpec.general_zagreb(2),
    IndexSpec.general_zagreb(3),
    IndexSpec.mult_zagreb_log(),
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # map argparse's default exit(2) onto exit code 1
        raise _UsageError(message)


def _parse_range(text: str) -> list:
    if ".." in text:
        lo, hi = text.split("..", 1)
        start, stop = int(lo), int(hi)
        if stop < start:
            raise _UsageError(f"empty range {text!r}")
        return list(range(start, stop + 1))
    return [int(text)]


def _parse_sequence(text: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise _UsageError(f"could not parse degree sequence {text!r}")


def _index_from_args(args) -> IndexSpec:
    if args.index == "general-zagreb":
        if args.alpha is None:
            raise _UsageError("--alpha is required for --index general-zagreb")
        try:
            alpha = Fraction(args.alpha)
        except (ValueError, ZeroDivisionError):
            raise _UsageError(f"could not parse exponent {args.alpha!r}")
        return IndexSpec.general_zagreb(alpha)
    if args.alpha is not None:
        raise _UsageError("--alpha only applies to --index general-zagreb")
    if args.index == "inverse-degree":
        return IndexSpec.inverse_degree()
    return IndexSpec.mult_zagreb_log()


def _emit(text: str, output) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# extremal
# ---------------------------------------------------------------------------


def cmd_extremal(args) -> int:
    klass = CyclomaticClass(c=args.c, n=args.n)
    family = extremal_family(klass)
    if args.format == "json":
        doc = {
            "n": klass.n,
            "c": klass.c,
            "degree_total": klass.degree_total,
            "maximals": [list(seq) for seq in family.maximals],
            "minimal": list(family.minimal),
            "maximals_pairwise_incomparable": len(family.maximals) > 1,
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    elif args.format == "csv":
        lines = ["n,c,role,sequence"]
        for seq in family.maximals:
            lines.append(f"{klass.n},{klass.c},maximal,{plain_sequence(seq)}")
        lines.append(f"{klass.n},{klass.c},minimal,{plain_sequence(family.minimal)}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        lines = [f"n={klass.n} c={klass.c} degree-total={klass.degree_total}"]
        for i, seq in enumerate(family.maximals, start=1):
            lines.append(f"maximal {i}: {format_sequence(seq)}")
        if len(family.maximals) > 1:
            lines.append("maximals: pairwise incomparable under majorization")
        lines.append(f"minimal: {format_sequence(family.minimal)}")
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------


def _render_bounds_text(report, refined) -> list:
    lines = [
        f"n={report.klass.n} c={report.klass.c} index={report.index.label}",
        f"  lower: {format_index_value(report.lower)} at {format_sequence(report.lower_attainer)}",
        f"  upper: {format_index_value(report.upper)} at {format_sequence(report.upper_attainer)}",
    ]
    if len(report.candidates) > 1:
        binding = (
            report.upper_attainer
            if report.index.schur_class is SchurClass.CONVEX
            else report.lower_attainer
        )
        rendered = []
        for seq, val in report.candidates:
            mark = " [binding]" if seq == binding else ""
            rendered.append(f"{format_sequence(seq)} -> {format_index_value(val)}{mark}")
        lines.append("  candidates: " + "; ".join(rendered))
    if refined is not None:
        lines.append(
            "  refined upper (when the (c+2)-th degree is at least 2): "
            + format_index_value(refined)
        )
    if report.verified:
        lines.append(f"  verified: {report.verified}")
    for note in report.notes:
        lines.append(f"  note: {note}")
    return lines


def cmd_bounds(args) -> int:
    index = _index_from_args(args)
    cap = args.cap
    reports = []
    refined_values = []
    for c in _parse_range(args.c):
        klass = CyclomaticClass(c=c, n=args.n)
        report = annotate_orientation(bounds(klass, index))
        if args.verify:
            report = with_verification(report, cap)
        refined = None
        if args.refined:
            refined = refined_inverse_degree_upper(klass)
        reports.append(report)
        refined_values.append(refined)

    if args.format == "json":
        docs = []
        for report, refined in zip(reports, refined_values):
            doc = report_to_json_dict(report)
            if refined is not None:
                doc["refined_upper"] = format_index_value(refined)
            docs.append(doc)
        _emit(json.dumps(docs, indent=2) + "\n", args.output)
    elif args.format == "csv":
        extra = {}
        if args.refined:
            refined_by_c = {
                report.klass.c: value
                for report, value in zip(reports, refined_values)
            }
            extra["refined_upper_exact"] = lambda r: (
                format_index_value(refined_by_c[r.klass.c])
                if refined_by_c[r.klass.c] is not None
                else ""
            )
        _emit(reports_to_csv(reports, extra_fields=extra), args.output)
    else:
        lines = []
        for report, refined in zip(reports, refined_values):
            lines.extend(_render_bounds_text(report, refined))
        _emit("\n".join(lines) + "\n", args.output)

    statuses = [report.verified for report in reports]
    if MISMATCH in statuses:
        return EXIT_MISMATCH
    if SKIPPED in statuses:
        return EXIT_CAP
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _equivalence_check(klass) -> tuple:
    """Compare the three membership tests on every candidate with the right sum."""
    failures = []
    count = 0
    for seq in candidate_sequences(klass.n, klass.degree_total):
        count += 1
        counting = is_ccyclic_sequence(seq, klass)
        inequalities = is_ccyclic_sequence_via_inequalities(seq, klass)
        graphical = is_graphical(seq)
        if not (counting == inequalities == graphical):
            failures.append((seq, counting, inequalities, graphical))
    return count, failures


def _verify_orders(args, c: int) -> list:
    if args.n is not None:
        orders = [args.n]
    else:
        orders = list(range(2, args.n_max + 1))
    return [n for n in orders if n >= min_order(c)]


def cmd_verify(args) -> int:
    if args.n is None and args.n_max is None:
        raise _UsageError("verify needs --n or --n-max")
    if args.n is not None and args.n_max is not None:
        raise _UsageError("give either --n or --n-max, not both")
    cap = args.cap
    classes = _parse_range(args.c)
    lines = []
    mismatch = skipped = False

    if args.conjecture:
        for c in classes:
            for n in _verify_orders(args, c):
                try:
                    report = check_pattern_extremality(c, n, cap)
                except EnumerationCapError:
                    lines.append(f"CONJECTURE c={c} n={n}: skipped (enumeration cap {cap})")
                    skipped = True
                    continue
                status = "holds" if report.ok else "FAILS"
                lines.append(
                    f"CONJECTURE c={c} n={n}: closed-form patterns extremal over "
                    f"{report.sequence_count} sequences: {status}"
                )
        _emit("\n".join(lines) + "\n", args.output)
        return EXIT_CAP if skipped else EXIT_OK

    checks = ok_count = 0
    for c in classes:
        if c > 6:
            raise _UsageError(f"c={c} has no proven characterization; use --conjecture")
        for n in _verify_orders(args, c):
            klass = CyclomaticClass(c=c, n=n)
            if n > cap:
                lines.append(f"equivalence c={c} n={n}: skipped (enumeration cap {cap})")
                skipped = True
                continue
            checks += 1
            count, failures = _equivalence_check(klass)
            if failures:
                mismatch = True
                seq = failures[0][0]
                lines.append(
                    f"equivalence c={c} n={n}: MISMATCH on {format_sequence(seq)} "
                    f"(counting={failures[0][1]} inequalities={failures[0][2]} "
                    f"graphical={failures[0][3]})"
                )
            else:
                ok_count += 1
                lines.append(f"equivalence c={c} n={n}: ok ({count} candidates)")
            if args.equivalence_only:
                continue

            checks += 1
            coverage = check_family_extremality(klass, cap)
            if coverage.ok:
                ok_count += 1
                lines.append(
                    f"extremality c={c} n={n}: ok ({coverage.sequence_count} sequences)"
                )
            else:
                mismatch = True
                lines.append(f"extremality c={c} n={n}: MISMATCH")

            for index in VERIFY_INDICES:
                checks += 1
                outcome = verify_bounds(klass, index, cap)
                if outcome.status == EXACT_MATCH:
                    ok_count += 1
                    lines.append(f"bounds c={c} n={n} {index.label}: exact-match")
                elif outcome.status == SKIPPED:
                    checks -= 1
                    skipped = True
                    lines.append(f"bounds c={c} n={n} {index.label}: skipped")
                else:
                    mismatch = True
                    lines.append(f"bounds c={c} n={n} {index.label}: MISMATCH")

    lines.append(
        f"summary: {checks} checks, {ok_count} ok, "
        f"{checks - ok_count} mismatched, skipped={'yes' if skipped else 'no'}"
    )
    _emit("\n".join(lines) + "\n", args.output)
    if mismatch:
        return EXIT_MISMATCH
    if skipped:
        return EXIT_CAP
    return EXIT_OK


# ---------------------------------------------------------------------------
# realize
# ---------------------------------------------------------------------------


def cmd_realize(args) -> int:
    seq = _parse_sequence(args.seq)
    graph = realize(seq)
    if args.check_c is not None:
        actual = cyclomatic_number(graph)
        if actual != args.check_c:
            print(
                f"error: realized graph has {actual} independent cycles, "
                f"expected {args.check_c}",
                file=sys.stderr,
            )
            return EXIT_MISMATCH
    label = args.label if args.label is not None else plain_sequence(seq)
    _emit(export_dot(graph, label=label), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser wiring
# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="ccyclic",
        description=(
            "Majorization-extremal degree sequences of connected graphs with a "
            "prescribed number of independent cycles, and sharp bounds for "
            "degree-based topological indices."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extremal", help="maximal/minimal degree sequences of a class")
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--c", type=int, required=True, help="number of independent cycles")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.set_defaults(handler=cmd_extremal)

    p = sub.add_parser("bounds", help="index bounds over a class (or range of classes)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", required=True, help="single value or inclusive range like 1..6")
    p.add_argument(
        "--index",
        choices=("general-zagreb", "inverse-degree", "mult-zagreb-log"),
        default="general-zagreb",
    )
    p.add_argument("--alpha", help="exponent for general-zagreb (rational, not 0 or 1)")
    p.add_argument("--refined", action="store_true",
                   help="also report the refined inverse-degree upper bound (c >= 3)")
    p.add_argument("--verify", action="store_true",
                   help="append the exhaustive-enumeration verdict")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                   help="enumeration cap for --verify")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--output")
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser("verify", help="run the exhaustive verification suite")
    p.add_argument("--n", type=int, help="check a single order")
    p.add_argument("--n-max", type=int, help="check every order up to this one")
    p.add_argument("--c", default="0..6", help="single value or range, default 0..6")
    p.add_argument("--equivalence-only", action="store_true",
                   help="only cross-check the membership characterizations")
    p.add_argument("--conjecture", action="store_true",
                   help="check the closed-form patterns against enumeration (any c)")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    p.add_argument("--output")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("realize", help="build a connected graph from a degree sequence")
    p.add_argument("--seq", required=True, help="comma-separated nonincreasing degrees")
    p.add_argument("--check-c", type=int, dest="check_c",
                   help="fail unless the realized cyclomatic number equals this")
    p.add_argument("--label", help="label embedded in the DOT output")
    p.add_argument("--output")
    p.set_defaults(handler=cmd_realize)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
