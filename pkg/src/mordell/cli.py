"""Command line entry point: ``cf``, ``pell``, ``verify`` and ``families``.

Exit codes: 0 ok, 1 counterexample found, 2 usage or configuration error,
3 internal consistency failure (fast and exact paths disagree).
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import harness
from .cf_surd import expand_sqrt
from .errors import CheckpointCorrupt, CheckpointMismatch, InternalError, MordellError
from .pell_unit import decompose_unit, fundamental_solution
from .verify import FAMILIES, aac_both, mordell_both

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _int(text: str) -> int:
    # accept 10000000, 10_000_000 and 1e7
    try:
        return int(text.replace("_", ""))
    except ValueError:
        v = float(text)
        if v != int(v):
            raise argparse.ArgumentTypeError(f"not an integer: {text}")
        return int(v)


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(_int(t) for t in text.split(",") if t.strip())


def cmd_cf(args) -> int:
    exp = expand_sqrt(args.d, args.max_terms)
    print(f"sqrt({exp.d}) = {exp}")
    print(f"n = {exp.n}")
    print(f"l = {exp.l}")
    return EXIT_OK


def cmd_pell(args) -> int:
    sol = fundamental_solution(args.d)
    print(f"x = {sol.x}")
    print(f"y = {sol.y}")
    print(f"norm = {sol.norm:+d}")
    print(f"unit = {sol}")
    if args.decompose:
        if args.d % 4 == 3 and sol.norm == 1:
            dec = decompose_unit(args.d, sol)
            print(f"a = {dec.a}")
            print(f"b = {dec.b}")
            print(f"epsilon = {dec.epsilon:+d}")
        else:
            print("decomposition only defined for d = 3 mod 4", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = harness.RunConfig(
        mode=args.mode,
        start=args.start,
        stop=args.stop,
        jobs=args.jobs,
        chunk_size=args.chunk,
        full_every=args.full_every,
        checkpoint_path=args.checkpoint,
        report_path=args.report,
        report_format=args.format,
        force_full=args.force_full,
    )
    summary = harness.run_range(cfg)
    s = summary.as_dict()
    print(" ".join(f"{k}={v}" for k, v in s.items()) + f" full_checks={summary.full_checks}")
    for rec in summary.counterexample_records:
        print(f"COUNTEREXAMPLE {rec}")
    return EXIT_COUNTEREXAMPLE if summary.counterexamples else EXIT_OK


def cmd_families(args) -> int:
    primes = FAMILIES[args.period](args.count)
    status = EXIT_OK
    for p in primes:
        if not args.verify:
            print(p)
            continue
        l = expand_sqrt(p).l
        rec = mordell_both(p) if p % 4 == 3 else aac_both(p)
        ok = l == args.period
        if not ok:
            status = EXIT_INTERNAL
        print(f"{p} l={l} {'ok' if ok else 'PERIOD MISMATCH'} {rec.verdict}")
        if not rec.holds:
            status = max(status, EXIT_COUNTEREXAMPLE)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mordell", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cf", help="continued fraction of sqrt(d)")
    p.add_argument("d", type=_int)
    p.add_argument("--max-terms", type=_int, default=None)
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("pell", help="fundamental solution of x^2 - d y^2 = +-1")
    p.add_argument("d", type=_int)
    p.add_argument("--decompose", action="store_true")
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("verify", help="verify a prime range")
    p.add_argument("mode", choices=harness.MODES)
    p.add_argument("--from", dest="start", type=_int, required=True)
    p.add_argument("--to", dest="stop", type=_int, required=True)
    p.add_argument("--jobs", type=_int, default=1)
    p.add_argument("--chunk", type=_int, default=harness.DEFAULT_CHUNK)
    p.add_argument("--full-every", type=_int, default=harness.DEFAULT_FULL_EVERY)
    p.add_argument("--force-full", type=_int_list, default=(), help="comma-separated primes checked on both paths")
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--report", default=None)
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("families", help="primes of the period-2/4/6 families")
    p.add_argument("--period", type=int, choices=sorted(FAMILIES), required=True)
    p.add_argument("--count", type=_int, required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_families)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except InternalError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (CheckpointMismatch, CheckpointCorrupt, MordellError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
