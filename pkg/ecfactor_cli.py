#!/usr/bin/env python3
"""
Command-line interface for the elliptic-curve factoring engine
Usage: python ecfactor_cli.py {count,trace,factor,explore} [options]

Polynomials are written as comma-separated decimal coefficients, lowest
degree first: "1,3,1" is t^2 + 3t + 1.
"""

import argparse
import logging
import os
import sys

from config import (EXIT_BUDGET_EXHAUSTED, EXIT_OK, EXIT_PARSE_ERROR,
                    EXIT_PRECONDITION, LOG_FORMAT, LOG_LEVEL)
from driver import CurveFactorizer
from elliptic import Degenerate, curve_new, point_count_naive
from errors import (AttemptBudgetExhausted, DegenerateCurve, FactoringError,
                    PolynomialParseError)
from fp_poly import FpPoly
from numtheory import require_prime
from query_ring import QuotientRing
from schoof import schoof_count, trace_mod
from zexplorer import FamilySpec, collision_report, family_traces, format_report, write_csv

logger = logging.getLogger(__name__)


def decimal_natural(text: str) -> int:
    """argparse type: a plain decimal natural number"""
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"expected a decimal natural number, got {text!r}")
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Deterministic polynomial factoring over F_p through elliptic curves',
        epilog='Coefficient lists are lowest degree first, e.g. "1,3,1" for t^2+3t+1.')
    parser.add_argument('--verbose', action='store_true', help='Log at DEBUG level on stderr')
    parser.add_argument('--log-file', help='Also write the log to this file, e.g. logs/ecfactor.log')
    commands = parser.add_subparsers(dest='command', required=True)

    count = commands.add_parser('count', help='Count points on y^2 = x^3 + a4*x + a6 over F_p')
    count.add_argument('--p', type=decimal_natural, required=True, help='Prime field size')
    count.add_argument('--a4', type=decimal_natural, required=True)
    count.add_argument('--a6', type=decimal_natural, required=True)
    count.add_argument('--engine', choices=['naive', 'schoof'], default='schoof',
                       help='Point counting method (default: schoof)')

    trace = commands.add_parser('trace', help='Trace of Frobenius modulo a small prime ell')
    trace.add_argument('--p', type=decimal_natural, required=True, help='Prime field size')
    trace.add_argument('--a4', type=decimal_natural, required=True)
    trace.add_argument('--a6', type=decimal_natural, required=True)
    trace.add_argument('--ell', type=decimal_natural, required=True, help='Prime modulus ell != p')

    factor = commands.add_parser('factor', help='Factor a polynomial over F_p')
    factor.add_argument('--p', type=decimal_natural, required=True, help='Prime field size')
    factor.add_argument('--f', required=True, help='Coefficients C0,C1,... lowest degree first')
    factor.add_argument('--trace-log', action='store_true', help='Print the curve/shift attempt log')
    factor.add_argument('--max-attempts', type=decimal_natural,
                        help='Attempts per root-finding call (default: max(64, ceil(log2(p)^2)))')

    explore = commands.add_parser('explore', help='Fiber-trace collisions of a curve family')
    explore.add_argument('--p', type=decimal_natural, required=True, help='Prime field size')
    explore.add_argument('--a4poly', required=True, help='a4(u) coefficients, lowest degree first')
    explore.add_argument('--a6poly', required=True, help='a6(u) coefficients, lowest degree first')
    explore.add_argument('--engine', choices=['naive', 'schoof'], default='naive',
                         help='Per-fiber trace method (default: naive)')
    explore.add_argument('--workers', type=decimal_natural, default=1,
                         help='Worker processes for the per-fiber traces (default: 1)')
    explore.add_argument('--csv', help='Write "u,trace" rows to this path')
    return parser


def setup_logging(verbose: bool, log_file: str = None):
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        directory = os.path.dirname(log_file)
        if directory:
            os.makedirs(directory, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, LOG_LEVEL),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


def _prime_curve(p: int, a4: int, a6: int):
    require_prime(p)
    curve = curve_new(QuotientRing.prime_field(p), a4 % p, a6 % p)
    if isinstance(curve, Degenerate):
        raise DegenerateCurve(f"y^2 = x^3 + {a4 % p}x + {a6 % p} is singular over F_{p}")
    return curve


def run_count(args) -> int:
    _prime_curve(args.p, args.a4, args.a6)
    if args.engine == 'naive':
        count = point_count_naive(args.p, args.a4, args.a6)
        trace = args.p + 1 - count
    else:
        result = schoof_count(args.p, args.a4, args.a6)
        count, trace = result.count, result.trace
    print(f"N={count} a={trace}")
    return EXIT_OK


def run_trace(args) -> int:
    curve = _prime_curve(args.p, args.a4, args.a6)
    require_prime(args.ell)
    if args.ell == args.p:
        raise ValueError(f"ell must differ from p = {args.p}")
    residue = trace_mod(curve, args.ell)
    print(f"a mod {args.ell} = {residue.value}")
    return EXIT_OK


def run_factor(args) -> int:
    p = require_prime(args.p)
    f = FpPoly.from_text(p, args.f)
    factorizer = CurveFactorizer(p, max_attempts=args.max_attempts)
    result = factorizer.factor(f)
    if result.unit != 1:
        print(f"unit={result.unit}")
    for g, multiplicity in result.factors:
        print(f"{g.to_text()} ^{multiplicity}")
    if args.trace_log:
        print("trace_log:")
        for record in result.trace_log:
            print(record.to_text())
    return EXIT_OK


def run_explore(args) -> int:
    p = require_prime(args.p)
    spec = FamilySpec(p, FpPoly.from_text(p, args.a4poly), FpPoly.from_text(p, args.a6poly))
    traces = family_traces(spec, engine=args.engine, workers=max(1, args.workers))
    if not traces:
        raise ValueError(f"every fiber of {spec.label} is singular")
    print(format_report(collision_report(traces, p, spec.label)))
    if args.csv:
        write_csv(traces, args.csv)
    return EXIT_OK


COMMANDS = {
    'count': run_count,
    'trace': run_trace,
    'factor': run_factor,
    'explore': run_explore,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_PARSE_ERROR
    setup_logging(args.verbose, args.log_file)

    try:
        return COMMANDS[args.command](args)
    except PolynomialParseError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except AttemptBudgetExhausted as e:
        print(f"Error: {e}", file=sys.stderr)
        for record in e.trace_log:
            print(record.to_text(), file=sys.stderr)
        return EXIT_BUDGET_EXHAUSTED
    except (FactoringError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
