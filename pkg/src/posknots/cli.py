"""Command-line front end: ``factor``, ``bound``, ``census`` and ``verify``."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from typing import Sequence, TextIO

from .braid import BraidWord, closure_info, parse_braid, seifert_genus
from .checks import summarize, verify_census
from .errors import BraidParseError, InvariantError, NotAKnotError, TemplateError
from .factoring import factorize
from .invariants import alexander, alexander_unit_normal
from .orbits import OrbitRecord, census
from .template import load_template, template_stats

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_KNOT = 3
EXIT_INVARIANT = 4
EXIT_BOUND = 5
EXIT_EXPECT = 6

CSV_FIELDS = (
    "period",
    "orbit_word",
    "braid",
    "strands",
    "crossings",
    "genus",
    "factor_count",
    "factors",
    "alexander",
)

log = logging.getLogger("posknots")


def census_row(r: OrbitRecord) -> dict:
    return {
        "period": r.period,
        "orbit_word": r.label,
        "braid": str(r.braid),
        "strands": r.braid.strands,
        "crossings": r.crossings,
        "genus": r.genus,
        "factor_count": r.factor_count,
        "factors": ";".join(str(f) for f in r.factors),
        "alexander": str(r.alexander),
    }


def write_rows(records: list[OrbitRecord], fmt: str, out: TextIO) -> None:
    if fmt == "csv":
        w = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow(census_row(r))
    else:
        for r in records:
            out.write(json.dumps(census_row(r)) + "\n")


def _fmt_factor(b: BraidWord) -> str:
    return f"[{b}] (B{b.strands})"


def cmd_factor(args: argparse.Namespace) -> int:
    try:
        b = parse_braid(args.word, args.strands)
    except BraidParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    info = closure_info(b)
    try:
        f = factorize(b, require_knot=args.knot_only)
    except NotAKnotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_KNOT
    if f.factor_count == 0:
        head = "F = 0 (unknot)"
    else:
        tag = " (prime)" if f.factor_count == 1 else ""
        head = f"F = {f.factor_count}{tag}; factors: " + ", ".join(map(_fmt_factor, f.prime_factors))
    print(head)
    # a handful of small determinants: JIT compilation would cost more than it saves
    if info.is_knot:
        print(f"genus = {seifert_genus(b)}")
        print(f"alexander = {alexander(b, backend='numpy')}")
    else:
        print(f"components = {info.components}")
        print(f"genus = {seifert_genus(b)}")
        print(f"alexander = {alexander_unit_normal(b, backend='numpy')} (up to units)")
    return EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    try:
        t = load_template(args.template)
    except TemplateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(template_stats(t))
    return EXIT_OK


def _run_census(args: argparse.Namespace):
    if args.max_period < 1:
        raise TemplateError(f"--max-period must be >= 1, got {args.max_period}")
    t = load_template(args.template)
    return t, census(t, args.max_period, jobs=args.jobs)


def cmd_census(args: argparse.Namespace) -> int:
    try:
        t, records = _run_census(args)
    except TemplateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantError as exc:
        print(f"internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    write_rows(records, args.format, sys.stdout)
    sys.stdout.flush()
    summary = summarize(t, records)
    print(summary, file=sys.stderr)
    return EXIT_OK if summary.passed else EXIT_BOUND


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        t, records = _run_census(args)
        summary = verify_census(t, records, args.max_period)
    except TemplateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantError as exc:
        print(f"internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    print(summary, file=sys.stderr)
    if not summary.passed:
        return EXIT_BOUND
    if args.expect_max_f is not None and summary.max_f > args.expect_max_f:
        worst = next(r for r in records if r.factor_count == summary.max_f)
        print(
            f"expectation failed: maxF={summary.max_f} > {args.expect_max_f} "
            f"(first at orbit {worst.label})",
            file=sys.stderr,
        )
        return EXIT_EXPECT
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="posknots", description="Prime factors of knots on positive templates.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    f = sub.add_parser("factor", help="factor a positive braid closure into primes")
    f.add_argument("word", help="compact digits (e.g. 122112) or separated integers")
    f.add_argument("--strands", type=int, default=None)
    f.add_argument(
        "--knot-only",
        action="store_true",
        help="reject link closures (exit 3) instead of factoring them",
    )
    f.set_defaults(func=cmd_factor)

    b = sub.add_parser("bound", help="print chart counts, Betti number and N(T)")
    b.add_argument("template", help="template file or preset:<name>")
    b.set_defaults(func=cmd_bound)

    for name, func, text in (
        ("census", cmd_census, "tabulate every orbit up to a period"),
        ("verify", cmd_verify, "census plus every invariant suite"),
    ):
        c = sub.add_parser(name, help=text)
        c.add_argument("template", help="template file or preset:<name>")
        c.add_argument("--max-period", type=int, required=True)
        c.add_argument("--jobs", type=int, default=1)
        if name == "census":
            c.add_argument("--format", choices=("csv", "jsonl"), default="csv")
        else:
            c.add_argument("--expect-max-f", type=int, default=None)
        c.set_defaults(func=func)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # usage errors and --help: hand back argparse's status instead of raising
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
