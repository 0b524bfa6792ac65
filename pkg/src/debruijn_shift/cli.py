"""Command-line interface: ``debruijn-shift <command> [flags]``.

Exit codes: 0 success, 2 usage or validation error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import sys

from . import bench as bench_mod
from .errors import DeBruijnError
from .generator import ENGINES, FORMATS, generate, materialize, verify_debruijn, write_letters
from .lyndon import cfl_factorize
from .oracles import DEFAULT_SEQUENCE_CAP, SequenceOrder
from .shiftrule import head, next_max, next_min
from .words import format_word, necklace_count, parse_word

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY_FAILED = 3


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _alphabet(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"alphabet size must be >= 2, got {text}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError("n-list needs positive integers")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="debruijn-shift",
        description="Shift rule for the prefer-min / prefer-max De Bruijn sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("next", help="print the successor of an FSR state")
    p.add_argument("--k", type=_alphabet, required=True)
    p.add_argument("--order", choices=["min", "max"], default="min")
    p.add_argument("--state", required=True, help="state word, e.g. 21 or 0,12,3 when k > 10")

    for name, help_text in (("generate", "stream the sequence"), ("verify", "generate and check window distinctness")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=_positive, required=True)
        p.add_argument("--k", type=_alphabet, required=True)
        p.add_argument("--order", choices=["min", "max"], default="min")
        p.add_argument("--engine", choices=ENGINES, default="fsr")
        p.add_argument("--max-length", type=_positive, default=DEFAULT_SEQUENCE_CAP,
                       help="refuse to materialize more than this many letters")
        if name == "generate":
            p.add_argument("--limit", type=int, default=None, help="number of letters (default k^n)")
            p.add_argument("--format", choices=FORMATS, default=None,
                           help="digits (k <= 10, default), csv (default for k > 10) or binary")

    p = sub.add_parser("head", help="necklace-head predicate")
    p.add_argument("--k", type=_alphabet, required=True)
    p.add_argument("--word", required=True)

    p = sub.add_parser("cfl", help="Lyndon factorization of a word")
    p.add_argument("--k", type=_alphabet, required=True)
    p.add_argument("--word", required=True)

    p = sub.add_parser("stats", help="necklace count and sequence length")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_alphabet, required=True)

    p = sub.add_parser("bench", help="mean nanoseconds per next_min call")
    p.add_argument("--k", type=_alphabet, required=True)
    p.add_argument("--n-list", type=_int_list, required=True)
    p.add_argument("--samples", type=_positive, default=10_000)
    return parser


def _cmd_next(args, out) -> int:
    state = parse_word(args.state, args.k)
    step = next_min if args.order == "min" else next_max
    print(format_word(step(state)), file=out)
    return EXIT_OK


def _cmd_generate(args, out) -> int:
    fmt = args.format or ("digits" if args.k <= 10 else "csv")
    letters = generate(args.n, args.k, SequenceOrder.parse(args.order), args.engine,
                       limit=args.limit, cap=args.max_length)
    if fmt == "binary":
        write_letters(letters, args.k, fmt, getattr(out, "buffer", out))
    else:
        write_letters(letters, args.k, fmt, out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    seq = materialize(args.n, args.k, SequenceOrder.parse(args.order), args.engine, cap=args.max_length)
    report = verify_debruijn(seq, args.n, cap=args.max_length)
    print(report, file=out)
    return EXIT_OK if report.valid else EXIT_VERIFY_FAILED


def _cmd_head(args, out) -> int:
    print(str(head(parse_word(args.word, args.k))).lower(), file=out)
    return EXIT_OK


def _cmd_cfl(args, out) -> int:
    print(cfl_factorize(parse_word(args.word, args.k)), file=out)
    return EXIT_OK


def _cmd_stats(args, out) -> int:
    print(f"necklaces {necklace_count(args.n, args.k)}", file=out)
    print(f"length {args.k ** args.n}", file=out)
    return EXIT_OK


def _cmd_bench(args, out) -> int:
    for n, ns in bench_mod.bench(args.k, args.n_list, samples=args.samples).items():
        print(f"{n} {ns:.1f}", file=out)
    return EXIT_OK


COMMANDS = {
    "next": _cmd_next,
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "head": _cmd_head,
    "cfl": _cmd_cfl,
    "stats": _cmd_stats,
    "bench": _cmd_bench,
}


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except DeBruijnError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
