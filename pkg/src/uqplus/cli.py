"""Command-line front end.

Examples::

    uqplus nf --n 2 "x1*x2 - q^-1*x2*x1"
    uqplus coproduct --n 2 "e[1,3]"
    uqplus sigma --n 2 x1 x2
    uqplus verify all --n 2 --degree 4 --seed 1
    uqplus verify qbinomial --m-max 12

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import pbw
from .hopf import hopf_context
from .parser import ParseError, parse_element
from .report import render_json, render_table
from .suites import SUITE_NAMES, run_suite
from .tensor import sigma, tensor

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    def default(value):
        return argparse.SUPPRESS if suppress else value

    p.add_argument("--n", type=int, default=default(2), help="rank (number of generators)")
    p.add_argument("--format", choices=("text", "json"), default=default("text"))
    p.add_argument("--seed", type=int, default=default(0))
    p.add_argument("--degree", type=int, default=default(3), help="degree bound for sweeps")
    p.add_argument("--max-rank", type=int, default=default(pbw.MAX_RANK))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uqplus",
        description="Exact computations in U_q^+(sl_{n+1}) as a braided Hopf algebra.",
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("nf", "PBW normal form of an expression"),
        ("coproduct", "braided coproduct of an expression"),
        ("antipode", "antipode of an expression"),
        ("counit", "counit of an expression"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_common(p, suppress=True)
        p.add_argument("expression")

    p = sub.add_parser("sigma", help="braiding applied to LEFT (x) RIGHT")
    _add_common(p, suppress=True)
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("verify", help="run a verification suite")
    _add_common(p, suppress=True)
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--samples", type=int, default=25, help="random instances per check")
    p.add_argument("--m-max", type=int, default=12, help="largest m for q-binomial sweeps")
    p.add_argument("--out", help="also write the report to this file")
    return parser


def _emit(text: str, out: Optional[str] = None) -> None:
    print(text)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _compute(args) -> str:
    alg = pbw.algebra(args.n)
    if args.command == "sigma":
        a = parse_element(args.left, alg)
        b = parse_element(args.right, alg)
        result = sigma(tensor(a, b))
        payload = {"input": [args.left, args.right], "result": result.to_json()}
    else:
        a = parse_element(args.expression, alg)
        ctx = hopf_context(alg)
        if args.command == "nf":
            result = a
        elif args.command == "coproduct":
            result = ctx.coproduct(a)
        elif args.command == "antipode":
            result = ctx.antipode(a)
        else:
            result = ctx.counit(a)
        payload = {"input": args.expression, "result": result.to_json()}
    if args.format == "json":
        payload = {"command": args.command, "n": args.n, **payload}
        return json.dumps(payload, indent=2, sort_keys=True)
    return str(result)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if args.n < 1 or args.n > args.max_rank:
        print(f"error: rank {args.n} outside 1..{args.max_rank}", file=sys.stderr)
        return EXIT_USAGE
    pbw.MAX_RANK = max(pbw.MAX_RANK, args.max_rank)

    if args.command == "verify":
        if args.degree < 0 or args.samples < 0 or args.m_max < 1:
            print("error: --degree, --samples must be >= 0 and --m-max >= 1", file=sys.stderr)
            return EXIT_USAGE
        code, reports = run_suite(
            args.suite, args.n, args.degree, args.seed, args.samples, args.m_max
        )
        if args.format == "json":
            text = json.dumps(
                {
                    "suite": args.suite,
                    "n": args.n,
                    "degree_bound": args.degree,
                    "seed": args.seed,
                    "ok": code == EXIT_OK,
                    "reports": json.loads(render_json(reports)),
                },
                indent=2,
                sort_keys=True,
            )
        else:
            text = render_table(reports)
        _emit(text, args.out)
        return code

    try:
        _emit(_compute(args))
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
