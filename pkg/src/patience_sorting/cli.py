"""Command-line front end: ``patience-sorting <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import enumeration as en
from .geometry import ShadowDiagram, UnknownFormat, exhaustive_iterates, render
from .patience import (
    MalformedPair, OracleBoundExceeded, StablePair, extended_patience_sort,
    invert_extended, patience_sort,
)
from .patterns import ParseError, avoidance_set, parse_pattern
from .perms import Permutation, reverse_patience_word
from .sweep import count_avoiders_sharded, thread_count
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _word(p: Permutation, compact: bool) -> str:
    return p.compact() if compact and len(p) <= 9 else str(p)


def _cmd_sort(args, out):
    r = patience_sort(_perm(args.perm))
    out.write((json.dumps([list(p.cards) for p in r.piles]) if args.json else str(r)) + "\n")


def _cmd_extended(args, out):
    out.write(extended_patience_sort(_perm(args.perm)).to_json() + "\n")


def _cmd_rpw(args, out):
    out.write(_word(reverse_patience_word(patience_sort(_perm(args.perm))), args.compact) + "\n")


def _cmd_invert(args, out):
    text = args.pair.strip()
    if not text.startswith("{"):
        try:
            text = Path(args.pair).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read pair file: {exc}") from None
    out.write(_word(invert_extended(StablePair.from_json(text)), args.compact) + "\n")


def _cmd_avoid(args, out):
    try:
        pats = [parse_pattern(t) for t in args.pattern]
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    if args.count:
        out.write(f"{count_avoiders_sharded(args.n, pats)}\n")
    else:
        for p in avoidance_set(args.n, pats):
            out.write(_word(p, args.compact) + "\n")


def _cmd_shadow(args, out):
    iterates = exhaustive_iterates(_perm(args.perm))
    if args.all:
        target: ShadowDiagram | list[ShadowDiagram] = iterates
    else:
        k = args.iterate
        if k < 0:
            raise UsageError("--iterate must be nonnegative")
        target = iterates[k] if k < len(iterates) else ShadowDiagram((), k)
    try:
        text = render(target, args.format)
    except UnknownFormat as exc:
        raise UsageError(str(exc)) from None
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def _vector_text(label: str, values: Sequence[int]) -> str:
    width = len(str(len(values) - 1))
    return "".join(f"{label}({i:>{width}}) = {v}\n" for i, v in enumerate(values))


def _matrix_text(rows: Sequence[Sequence[int]]) -> str:
    width = max((len(str(v)) for row in rows for v in row), default=1)
    return "".join(" ".join(f"{v:>{width}}" for v in row) + "\n" for row in rows)


def _cmd_enumerate(args, out):
    which, N = next((k, v) for k, v in (("f", args.f), ("bell", args.bell), ("fib", args.fib),
                                       ("matrix", args.matrix), ("inverse", args.inverse))
                    if v is not None)
    if N < 0 or (which in ("matrix", "inverse") and N < 1):
        raise UsageError("size out of range")
    if which in ("matrix", "inverse"):
        rows = en.matrix_A(N) if which == "matrix" else en.inverse_I_minus_A(N)
        key = "A" if which == "matrix" else "inverse"
        if args.json:
            out.write(json.dumps({key: [[str(v) for v in row] for row in rows]}) + "\n")
        else:
            out.write(_matrix_text(rows))
        return
    values = {"f": lambda: en.f_table(N).f_n,
              "bell": lambda: en.bell_numbers(N),
              "fib": lambda: [en.fib(i) for i in range(N + 1)]}[which]()
    label = {"f": "f", "bell": "B", "fib": "F"}[which]
    if args.json:
        out.write(json.dumps({which: [str(v) for v in values]}) + "\n")
    else:
        out.write(_vector_text(label, values))


def _cmd_verify(args, out) -> int:
    suite = SUITES[args.suite]
    results = run_suite(args.suite, args.n)
    out.write(f"suite {suite.key}: {suite.header} (n <= {args.n})\n")
    failed = 0
    for r in results:
        out.write(f"{'PASS' if r.passed else 'FAIL'}  {r.name}\n")
        if not r.passed:
            failed += 1
            out.write(f"      counterexample: {r.counterexample}\n")
    out.write(f"{len(suite.properties) - failed} passed, {failed} failed\n")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="patience-sorting",
        description="Patience sorting, barred pattern avoidance, shadow diagrams and counts.",
        epilog="Sweeps run in PS_THREADS worker processes (default: CPU count).")
    sub = ap.add_subparsers(dest="command", required=True)

    def perm_cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("perm", help='permutation, "64518723" or "6,4,5,1,8,7,2,3"')
        return sp

    sp = perm_cmd("sort", "pile configuration R(p)")
    sp.add_argument("--json", action="store_true", help="piles as a JSON array")
    sp.set_defaults(func=_cmd_sort)

    perm_cmd("extended", "stable pair (R, S) as JSON").set_defaults(func=_cmd_extended)

    sp = perm_cmd("rpw", "reverse patience word of R(p)")
    sp.add_argument("--compact", action="store_true", help="digit word when n <= 9")
    sp.set_defaults(func=_cmd_rpw)

    sp = sub.add_parser("invert", help="permutation from a stable pair")
    sp.add_argument("--pair", required=True, help="inline JSON or a path to a JSON file")
    sp.add_argument("--compact", action="store_true")
    sp.set_defaults(func=_cmd_invert)

    sp = sub.add_parser("avoid", help="count or list pattern avoiders")
    sp.add_argument("--pattern", action="append", required=True, help='e.g. "3-!1-42"')
    sp.add_argument("--n", type=int, required=True)
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--list", action="store_true")
    sp.add_argument("--compact", action="store_true")
    sp.set_defaults(func=_cmd_avoid)

    sp = perm_cmd("shadow", "shadow diagram iterates")
    which = sp.add_mutually_exclusive_group()
    which.add_argument("--iterate", type=int, default=0)
    which.add_argument("--all", action="store_true")
    sp.add_argument("--format", choices=["svg", "json"], default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_shadow)

    sp = sub.add_parser("enumerate", help="counting tables")
    table = sp.add_mutually_exclusive_group(required=True)
    for flag, help_ in (("--f", "f(0..N)"), ("--bell", "B_0..B_N"), ("--fib", "F_0..F_N"),
                        ("--matrix", "N x N corner of A"),
                        ("--inverse", "N x N corner of (I - A)^-1")):
        table.add_argument(flag, type=int, metavar="N", help=help_)
    sp.add_argument("--json", action="store_true", help="decimal strings in JSON")
    sp.set_defaults(func=_cmd_enumerate)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", required=True, choices=sorted(SUITES))
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=_cmd_verify)
    return ap


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        thread_count()
        code = args.func(args, out)
    except OracleBoundExceeded as exc:
        err.write(f"oracle bound exceeded: {exc}\n")
        return EXIT_USAGE
    except MalformedPair as exc:
        err.write(f"malformed pair: {exc}\n")
        return EXIT_USAGE
    except (UsageError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
