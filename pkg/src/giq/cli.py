"""Command-line entry point ``giq``."""

from __future__ import annotations

import argparse
import sys

from .errors import GiqError, IntegrityError, InputError
from .pipeline import run_pipeline
from .problem import parse_preset, parse_problem

EXIT_OK, EXIT_INPUT, EXIT_INTEGRITY, EXIT_UNBALANCED = 0, 1, 2, 3

STAGES = {
    "strata": ("strata",),
    "balance": ("balance",),
    "series": ("series",),
    "betti": ("series", "betti"),
    "pairing": ("pairing",),
    "run": None,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="giq", description="Exact GIT quotient and intersection cohomology computations.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("strata", "index set of unstable strata"),
        ("balance", "weak balance verdict"),
        ("series", "equivariant and intersection Poincare series"),
        ("betti", "truncated subspace V and its Betti numbers"),
        ("pairing", "intersection pairing blocks"),
        ("run", "full pipeline"),
    ]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", nargs="?", help="problem file (omit when --preset is given)")
        p.add_argument("--preset", help="pn-cstar:a,b,c or p1-sl2:n")
        p.add_argument("--order", choices=["lex", "grlex"], help="monomial order")
        p.add_argument("--max-degree", type=int, help="degree bound (even)")
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--strict", action="store_true",
                       help="exit with status 3 when the balance check fails")
    sub.add_parser("selftest", help="run the golden regression suite")
    return parser


def _load(args):
    if args.preset and args.file:
        raise InputError("give either a problem file or --preset, not both")
    if args.preset:
        spec = parse_preset(args.preset)
    elif args.file:
        spec = parse_problem(args.file)
    else:
        raise InputError("a problem file or --preset is required")
    if args.max_degree is not None:
        spec = spec.with_max_degree(args.max_degree)
    return spec


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "selftest":
        from .selftest import run_selftest
        return EXIT_OK if run_selftest(sys.stdout) else EXIT_INTEGRITY
    try:
        spec = _load(args)
        report = run_pipeline(spec, args.order, STAGES[args.command])
    except IntegrityError as e:
        print(f"giq: integrity error: {e}", file=sys.stderr)
        return EXIT_INTEGRITY
    except (GiqError, ValueError) as e:
        print(f"giq: input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    text = report.to_json() if args.format == "json" else report.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for w in report.warnings:
        print(f"giq: warning: {w}", file=sys.stderr)
    if args.strict and not report.certified:
        return EXIT_UNBALANCED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
