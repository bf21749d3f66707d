"""Command line: ``hyplac analyze`` and ``hyplac scan``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .errors import InvalidInput
from .oracle import DEFAULT_CLOSURE_BOUND
from .params import normalize, parse_rational_list
from .report import analyze_parameters, scan_csv

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_DEGENERATE = 3


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyplac",
        description="Exact analysis of hypergeometric local systems with rational parameters.",
    )
    parser.add_argument("--version", action="version", version=f"hyplac {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="analyze one (alpha, beta) tuple and print a JSON report")
    an.add_argument("--alpha", required=True, help="comma-separated fractions, e.g. 0,1/2 (use --alpha=-1/2,... for a leading minus)")
    an.add_argument("--beta", required=True, help="comma-separated fractions")
    an.add_argument("--implicit-beta-one", action="store_true",
                    help="append the bottom parameter 1 (i.e. beta = 0) of nF(n-1)")
    an.add_argument("--oracle", action="store_true", help="also run the exact monodromy-matrix checks")
    an.add_argument("--closure-bound", type=_positive_int, default=DEFAULT_CLOSURE_BOUND)
    an.add_argument("--strict", action="store_true", help="exit 3 on reducible or non-generic input")
    an.add_argument("--json-indent", type=int, default=2)

    sc = sub.add_parser("scan", help="CSV verdicts for every canonical tuple up to a denominator bound")
    sc.add_argument("--n", type=_positive_int, required=True, help="rank")
    sc.add_argument("--max-denominator", type=_positive_int, required=True)
    sc.add_argument("--out", help="output path (default: standard output)")
    sc.add_argument("--jobs", type=_positive_int, default=1)
    sc.add_argument("--orbit-dedup", action="store_true",
                    help="keep one representative per Galois orbit")
    sc.add_argument("--require-irreducible", action="store_true",
                    help="only irreducible tuples (always the case; accepted for explicitness)")
    return parser


def _analyze(args) -> int:
    try:
        raw_alpha = parse_rational_list(args.alpha)
        raw_beta = parse_rational_list(args.beta)
    except InvalidInput as exc:
        print(f"hyplac: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    beta = raw_beta + ([Fraction(0)] if args.implicit_beta_one else [])
    try:
        p = normalize(raw_alpha, beta)
    except InvalidInput as exc:
        print(f"hyplac: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    echo = {
        "alpha": [t.strip() for t in args.alpha.split(",")],
        "beta": [t.strip() for t in args.beta.split(",")],
        "implicit_beta_one": args.implicit_beta_one,
    }
    report = analyze_parameters(p, echo, oracle=args.oracle, closure_bound=args.closure_bound)
    indent = args.json_indent if args.json_indent > 0 else None
    print(json.dumps(report.to_dict(), indent=indent))
    if args.strict and report.degenerate is not None:
        print(f"hyplac: degenerate input ({report.degenerate})", file=sys.stderr)
        return EXIT_DEGENERATE
    return EXIT_OK


def _scan(args) -> int:
    text = scan_csv(args.n, args.max_denominator, jobs=args.jobs, orbit_dedup=args.orbit_dedup)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"hyplac: error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_INVALID
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        return _analyze(args)
    return _scan(args)


if __name__ == "__main__":
    sys.exit(main())
