"""Command-line front end: ``python -m maxcurves <command> ...``."""

from __future__ import annotations

import argparse
import contextlib
import sys
from fractions import Fraction
from typing import IO, Optional, Sequence

from . import cubic
from .bound import max_degree
from .diophantine import convergents, frobenius_angle, required_eps
from .errors import InvalidArgument, InvalidPair, InvariantViolation, MaxCurvesError
from .exact import classify, is_maximal, is_square
from .output import OutputRecord, write_records, write_rows
from .search import SearchConfig, enumerate_triples, ordinary_degrees, verify_triple
from .supersingular import supersingular_degrees


def _fraction(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxcurves",
        description="Extensions of F_q over which an elliptic curve with trace a1 is maximal.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_output(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
        p.add_argument("--out", help="write to this file instead of stdout")

    p = sub.add_parser("check", help="is the pair maximal over F_{q^n}?")
    p.add_argument("q", type=int)
    p.add_argument("a1", type=int)
    p.add_argument("n", type=int)

    p = sub.add_parser("classify", help="ordinary/supersingular and the maximal degrees")
    p.add_argument("q", type=int)
    p.add_argument("a1", type=int)

    p = sub.add_parser("bound", help="the degree ceiling for ordinary pairs over F_q")
    p.add_argument("q", type=int)

    p = sub.add_parser("convergents", help="convergents of theta/pi")
    p.add_argument("q", type=int)
    p.add_argument("a1", type=int)
    p.add_argument("--limit", type=int, help="largest denominator (default: the degree ceiling)")
    with_output(p)

    p = sub.add_parser("search", help="enumerate maximal triples over a range of prime powers")
    p.add_argument("--qmin", type=int, required=True)
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--include-supersingular", action="store_true")
    p.add_argument("--n-floor", type=int, default=2, help="report n >= this (default 2)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--verify", action=argparse.BooleanOptionalAction, default=True)
    with_output(p)

    p = sub.add_parser("cubic", help="degree-3 families")
    csub = p.add_subparsers(dest="cubic_command", required=True)
    c = csub.add_parser("soomro", help="triples (a1^2 + b, a1, 3) with b^2 <= a1")
    c.add_argument("--amax", type=int, required=True)
    with_output(c)
    c = csub.add_parser("family", help="prime triples (a^2 + c^2, a, 3) with c^4 <= a")
    c.add_argument("--amax", type=int, required=True)
    with_output(c)
    c = csub.add_parser("candidates", help="the two possible traces for n = 3")
    c.add_argument("q", type=int)
    c = csub.add_parser("sector", help="primes a^2 + c^2 in the sector sets")
    c.add_argument("--amax", type=int, required=True)
    c.add_argument("--theta", type=_fraction, default=cubic.DEFAULT_THETA)
    with_output(c)
    return parser


def _open_out(path: Optional[str], stdout: IO[str]):
    if path is None:
        return stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _describe(q: int, a1: int) -> str:
    cls = classify(q, a1)
    if cls.supersingular:
        prog = supersingular_degrees(q, a1)
        return f"{cls}, maximal degrees: {prog}"
    degrees = ordinary_degrees(q, a1)
    if not is_square(q) and is_maximal(q, a1, 1):
        degrees = [1] + degrees
    return f"{cls}, maximal degrees: {', '.join(map(str, degrees)) or 'none'}"


def _dispatch(args: argparse.Namespace, stdout: IO[str], stderr: IO[str]) -> int:
    cmd = args.command
    if cmd == "check":
        print("true" if is_maximal(args.q, args.a1, args.n) else "false", file=stdout)
        return 0
    if cmd == "classify":
        print(_describe(args.q, args.a1), file=stdout)
        return 0
    if cmd == "bound":
        b = max_degree(args.q)
        print(f"{b.n_max} [{b.bracket[0]}, {b.bracket[1]}]", file=stdout)
        return 0

    out, close = _open_out(getattr(args, "out", None), stdout)
    try:
        if cmd == "convergents":
            limit = args.limit if args.limit is not None else max_degree(args.q).n_max
            angle = frobenius_angle(args.q, args.a1, required_eps(args.q, max(limit, 3)))
            rows = (
                {"m": c.m, "n": c.n, "m_odd": bool(c.m & 1), "n_odd": bool(c.n & 1)}
                for c in convergents(angle.x, limit)
            )
            write_rows(rows, ("m", "n", "m_odd", "n_odd"), args.format, out)
        elif cmd == "search":
            cfg = SearchConfig(
                args.qmin,
                args.qmax,
                include_supersingular=args.include_supersingular,
                n_floor=args.n_floor,
                parallelism=args.jobs,
            )
            triples = enumerate_triples(cfg)
            if args.verify:
                triples = map(verify_triple, triples)
            write_records(map(OutputRecord.from_triple, triples), args.format, out)
        elif cmd == "cubic":
            _cubic(args, out)
    finally:
        if close:
            out.close()
    return 0


def _cubic(args: argparse.Namespace, out: IO[str]) -> None:
    sc = args.cubic_command
    if sc == "candidates":
        for a1 in sorted(cubic.cubic_candidates(args.q)):
            flag = a1 * a1 <= 4 * args.q and is_maximal(args.q, a1, 3)
            print(f"{a1} {'maximal' if flag else 'not-maximal'}", file=out)
    elif sc == "soomro":
        recs = map(OutputRecord.from_triple, cubic.soomro_triples(args.amax))
        write_records(recs, args.format, out)
    elif sc == "family":
        recs = map(OutputRecord.from_triple, cubic.cubic_prime_family(args.amax))
        write_records(recs, args.format, out)
    elif sc == "sector":
        fields = ("p", "a", "c", "s3", "s4", "s5", "s6")
        rows = (
            {f: getattr(s, f) for f in fields}
            for s in cubic.sector_enumerate(args.amax, args.theta)
        )
        write_rows(rows, fields, args.format, out)


def run(argv: Optional[Sequence[str]] = None, stdout: IO[str] = None, stderr: IO[str] = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        # argparse reports usage errors on sys.stderr
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, stdout, stderr)
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=stderr)
        return 1
    except (InvalidArgument, InvalidPair, MaxCurvesError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
