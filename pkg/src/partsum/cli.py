"""Command-line interface: ``partsum {iterate,limit,classify,scan,verify}``.

Exit status is 0 on success, 2 on usage errors and 1 when the
computation itself fails (no convergence, boundary case, failed check).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

import numpy as np

from . import io
from .distribution import normalize_l1, random_parent, tv_distance, uniform
from .errors import (
    BoundaryCase,
    InvalidParams,
    MixedSignVector,
    NoConvergence,
    PartsumError,
    PreconditionViolated,
)
from .katz import KatzParams, Kind, classify, katz_g, predict_limit
from .scan import ScanConfig, parse_range, scan
from .spectral import closed_form_eigenvector, dominant_index, limit_via_power_method
from .summation import DEFAULT_MAX_ITER, DEFAULT_TOL, iterate

SEED_ENV = "PSL_SEED"


def _katz(text):
    try:
        return KatzParams.parse(text)
    except (ValueError, InvalidParams) as exc:
        raise argparse.ArgumentTypeError(f"{exc} (expected ALPHA,BETA with ALPHA >= 0, BETA < 1)")


def _range(text):
    try:
        return parse_range(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _parent_spec(text):
    if text == "uniform" or text.startswith("random:"):
        if text.startswith("random:"):
            try:
                int(text.split(":", 1)[1])
            except ValueError:
                raise argparse.ArgumentTypeError(f"bad seed in {text!r} (expected random:SEED)")
        return text
    if not os.path.exists(text):
        raise argparse.ArgumentTypeError(f"{text!r} is not uniform, random:SEED or an existing file")
    return text


def _support(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def _seed_override():
    value = os.environ.get(SEED_ENV)
    return int(value) if value not in (None, "") else None


def _load_parent(spec, S):
    if spec == "uniform":
        return uniform(S)
    if spec.startswith("random:"):
        seed = _seed_override()
        return random_parent(S, int(spec.split(":", 1)[1]) if seed is None else seed)
    parent = io.read_distribution(spec)
    if parent.S != S:
        raise ValueError(f"parent {spec} has S = {parent.S}, expected {S}")
    return parent


def _fmt_pmf(values) -> str:
    return " ".join(f"{x:.6f}" for x in np.asarray(values))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partsum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("iterate", help="iterate the partial summation from a parent")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--katz", type=_katz, metavar="A,B", help="Katz parameters alpha,beta")
    src.add_argument("--g-table", metavar="PATH", help="CSV file with a single column 'g'")
    p.add_argument("--S", type=_support, metavar="N", help="support size (required with --katz)")
    p.add_argument("--parent", type=_parent_spec, default="uniform", metavar="PATH|uniform|random:SEED")
    p.add_argument("--steps", type=_support, default=DEFAULT_MAX_ITER, metavar="N", help="maximum number of steps")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, metavar="X")
    p.add_argument("--trace", metavar="PATH", help="write per-step distance and eigenvalue estimate as CSV")

    for name, text in (("limit", "predicted limit distribution"), ("classify", "limit type of a Katz triple")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--katz", type=_katz, required=True, metavar="A,B")
        p.add_argument("--S", type=_support, required=True, metavar="N")

    p = sub.add_parser("scan", help="classify a grid of Katz parameters into CSV")
    p.add_argument("--alpha", type=_range, required=True, metavar="A:B:STEP")
    p.add_argument("--beta", type=_range, required=True, metavar="A:B:STEP")
    p.add_argument("--S", type=_support, required=True, metavar="N")
    p.add_argument("--out", required=True, metavar="PATH")

    p = sub.add_parser("verify", help="compare power iteration with the closed-form eigenvector")
    p.add_argument("--katz", type=_katz, required=True, metavar="A,B")
    p.add_argument("--S", type=_support, required=True, metavar="N")
    p.add_argument("--seeds", type=_support, default=10, metavar="K")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, metavar="X")
    p.add_argument("--steps", type=_support, default=DEFAULT_MAX_ITER, metavar="N")
    p.add_argument("--threshold", type=float, default=1e-8, metavar="X", help="maximum accepted tv distance")
    return parser


def cmd_iterate(args, parser):
    if args.katz is not None:
        if args.S is None:
            parser.error("argument --S: required with --katz (grammar: --katz A,B --S N)")
        g = katz_g(args.katz, args.S)
    else:
        g = io.read_gtable(args.g_table)
        if args.S is not None and args.S != g.S:
            parser.error(f"argument --S: {args.S} does not match the g table length {g.S}")
    try:
        parent = _load_parent(args.parent, g.S)
    except ValueError as exc:
        parser.error(f"argument --parent: {exc}")

    try:
        limit, trace = iterate(g, parent, tol=args.tol, max_iter=args.steps)
    except NoConvergence as exc:
        if args.trace:
            io.write_trace(exc.trace, args.trace)
        print(f"error: {exc}", file=sys.stderr)
        try:
            print("last iterate:", _fmt_pmf(normalize_l1(exc.last).probs))
        except MixedSignVector:
            print("last iterate (signed):", _fmt_pmf(exc.last.entries))
        return 1
    if args.trace:
        io.write_trace(trace, args.trace)
    print(f"converged after {trace.iterations_used} steps; eigenvalue estimate {trace.eigenvalue_estimate:.15g}")
    print(_fmt_pmf(limit.probs))
    return 0


def cmd_limit(args, parser):
    cls = classify(args.katz, args.S)
    try:
        limit = predict_limit(args.katz, args.S)
    except BoundaryCase as exc:
        print(str(cls), file=sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(str(cls))
    print(_fmt_pmf(limit.probs))
    return 0


def cmd_classify(args, parser):
    cls = classify(args.katz, args.S)
    print(str(cls))
    print("path: " + " -> ".join(cls.path))
    if cls.provenance:
        print("provenance: " + cls.provenance)
    return 1 if cls.kind is Kind.BOUNDARY else 0


def cmd_scan(args, parser):
    try:
        config = ScanConfig(args.alpha, args.beta, args.S, args.out)
    except ValueError as exc:
        parser.error(str(exc))
    n = scan(config)
    print(f"wrote {n} rows to {args.out}")
    return 0


def cmd_verify(args, parser):
    g = katz_g(args.katz, args.S)
    info = dominant_index(g)
    if not info.unique:
        print(f"error: {classify(args.katz, args.S)}: no unique dominant eigenvalue", file=sys.stderr)
        return 1
    closed = normalize_l1(closed_form_eigenvector(g, info.k))
    base = _seed_override() or 0
    worst = 0.0
    for seed in range(base, base + args.seeds):
        parent = random_parent(args.S, seed)
        try:
            limit = limit_via_power_method(g, parent, tol=args.tol, max_iter=args.steps)
        except (NoConvergence, PreconditionViolated) as exc:
            print(f"error: seed {seed}: {exc}", file=sys.stderr)
            return 1
        worst = max(worst, tv_distance(limit, closed))
    print(f"k={info.k} runs={args.seeds} max_tv={worst:.3e}")
    if worst >= args.threshold:
        print(f"error: max tv {worst:.3e} exceeds threshold {args.threshold:.1e}", file=sys.stderr)
        return 1
    return 0


COMMANDS = {
    "iterate": cmd_iterate,
    "limit": cmd_limit,
    "classify": cmd_classify,
    "scan": cmd_scan,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="warning: %(message)s", stream=sys.stderr)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, parser)
    except (InvalidParams, PartsumError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
