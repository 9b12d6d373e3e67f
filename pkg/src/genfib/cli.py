"""Command-line front end: ``term``, ``list`` and ``verify``."""

from __future__ import annotations

import argparse
import sys
from contextlib import nullcontext
from typing import List, Optional, Sequence

from .seqcore import FIBONACCI, LUCAS, gen_term, parse_sequence
from .verifier import (
    GridSpec,
    UnknownIdentityError,
    default_jobs,
    iter_records,
    list_identities,
    write_csv,
    write_json,
    write_text,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# options whose values may legitimately start with "-" (negative ranges or seeds)
_VALUE_OPTIONS = {"-m", "--m", "--n", "--r", "--k", "--seq", "--hseq"}

_WRITERS = {"text": write_text, "json": write_json, "csv": write_csv}


def parse_range(text: str) -> tuple:
    """Parse an inclusive ``lo..hi`` range; a bare integer means ``v..v``."""
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            v = int(text)
            return v, v
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}; expected lo..hi") from None
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo_i, hi_i


def _sequence(text: str):
    try:
        return parse_sequence(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _glue_values(argv: Sequence[str]) -> List[str]:
    # argparse reads "-5..5" as an option; bind such values to their flag with "="
    out: List[str] = []
    it = iter(argv)
    for token in it:
        if token in _VALUE_OPTIONS:
            value = next(it, None)
            if value is None:
                out.append(token)
                break
            out.append(f"{token}={value}")
        else:
            out.append(token)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genfib",
        description="Exact generalized Fibonacci terms and weighted-sum identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    term = sub.add_parser("term", help="print one exact term G_m")
    term.add_argument("--seq", type=_sequence, default=FIBONACCI,
                      help="fibonacci, lucas or a seed pair g0,g1 (default: fibonacci)")
    term.add_argument("-m", "--m", dest="m", type=int, required=True, help="index, any integer")

    lst = sub.add_parser("list", help="list registered identities")
    lst.add_argument("--filter", default=None, help="only ids starting with this prefix")

    verify = sub.add_parser("verify", help="sweep identities over a parameter grid")
    verify.add_argument("--identity", action="append", default=None,
                        help="identity id, comma list or 'all' (repeatable; default: all)")
    verify.add_argument("--m", type=parse_range, default=(-6, 6), help="range lo..hi (default -6..6)")
    verify.add_argument("--n", type=parse_range, default=(-6, 6), help="range lo..hi (default -6..6)")
    verify.add_argument("--r", type=parse_range, default=(-6, 6), help="range lo..hi (default -6..6)")
    verify.add_argument("--k", type=parse_range, default=(0, 6), help="range lo..hi (default 0..6)")
    verify.add_argument("--seq", type=_sequence, action="append", default=None,
                        help="G sequence (repeatable; default: fibonacci and lucas)")
    verify.add_argument("--hseq", type=_sequence, action="append", default=None,
                        help="H sequence for two-sequence identities (repeatable; default: --seq list)")
    verify.add_argument("--format", choices=sorted(_WRITERS), default="text")
    verify.add_argument("--jobs", type=int, default=None,
                        help="worker processes (default: $GENFIB_JOBS or CPU count)")
    verify.add_argument("--out", default=None, help="write the report here instead of stdout")
    return parser


def cmd_term(args) -> int:
    print(gen_term(args.seq, args.m))
    return EXIT_OK


def cmd_list(args) -> int:
    for desc in list_identities(args.filter):
        print(f"{desc.id}\t{desc.formula}\tguard: {desc.guard}")
    return EXIT_OK


def _identity_selection(raw: Optional[List[str]]) -> tuple:
    if not raw:
        return ("all",)
    return tuple(part.strip() for item in raw for part in item.split(",") if part.strip())


def cmd_verify(args, parser: argparse.ArgumentParser) -> int:
    try:
        jobs = args.jobs if args.jobs is not None else default_jobs()
        grid = GridSpec(
            m=args.m, n=args.n, r=args.r, k=args.k,
            seeds=tuple(args.seq or (FIBONACCI, LUCAS)),
            h_seeds=tuple(args.hseq) if args.hseq else None,
            identities=_identity_selection(args.identity),
            jobs=jobs,
        )
    except UnknownIdentityError as exc:
        print(f"genfib verify: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        parser.error(str(exc))

    write = _WRITERS[args.format]
    target = open(args.out, "w", encoding="utf-8", newline="") if args.out else nullcontext(sys.stdout)
    with target as out:
        summary = write(iter_records(grid), out)

    print(f"pass={summary['pass']} fail={summary['fail']} skipped={summary['skipped']}",
          file=sys.stderr)
    if summary["pass"] + summary["fail"] == 0:
        print("warning: every grid point was skipped by an identity guard", file=sys.stderr)
    return EXIT_FAIL if summary["fail"] else EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_values(sys.argv[1:] if argv is None else argv))
    if args.command == "term":
        return cmd_term(args)
    if args.command == "list":
        return cmd_list(args)
    return cmd_verify(args, parser)


if __name__ == "__main__":
    raise SystemExit(main())
