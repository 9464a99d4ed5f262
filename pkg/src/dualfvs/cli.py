"""Command-line front end.

Exit codes: 0 success, 1 no solution (or a failed verification), 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .dfvs import enumerate_dfvs_algoA, enumerate_minimal_dfvs, solve_dfvs
from .formats import FormatError, decode_digraph, decode_instance, encode_instance, format_family
from .generate import GeneratorConfig, generate_instance
from .graph import digraph_to_alternating
from .mfvs import enumerate_minimal_mfvs, solve_mfvs
from .oracle import OracleCapExceeded, oracle_minimal_mfvs_family
from .reductions import Infeasible, format_reduced, reduce_instance
from .verify import verify_solution

EXIT_OK = 0
EXIT_NO_SOLUTION = 1
EXIT_INPUT_ERROR = 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _load_graph(path: str):
    return decode_instance(_read(path))


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"cannot parse vertex list {text!r}") from None


def _cmd_solve(args) -> tuple[str, int]:
    g = _load_graph(args.file)
    if args.mode == "dfvs":
        if g.h != 2:
            raise InputError(f"dfvs mode needs h = 2, instance has h = {g.h}")
        sol = solve_dfvs(g, args.k)
    else:
        sol = solve_mfvs(g, args.k)
    if sol is None:
        return "NO SOLUTION\n", EXIT_NO_SOLUTION
    return format_family([sol]), EXIT_OK


def _cmd_enum(args) -> tuple[str, int]:
    g = _load_graph(args.file)
    if args.algo != "mfvs" and g.h != 2:
        raise InputError(f"algorithm {args.algo} needs h = 2, instance has h = {g.h}")
    run = {"cover": enumerate_dfvs_algoA, "compression": enumerate_minimal_dfvs, "mfvs": enumerate_minimal_mfvs}
    family = run[args.algo](g, args.k)
    return format_family(family), EXIT_OK if family else EXIT_NO_SOLUTION


def _cmd_gen(args) -> tuple[str, int]:
    try:
        cfg = GeneratorConfig(args.n, args.h, args.p, args.seed, args.simple)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return encode_instance(generate_instance(cfg)), EXIT_OK


def _cmd_reduce(args) -> tuple[str, int]:
    g = _load_graph(args.file)
    ref = _vertex_list(args.reference or "")
    if not set(ref) <= g.vertices:
        raise InputError("reference set mentions unknown vertices")
    try:
        inst = reduce_instance(g, ref)
    except Infeasible as exc:
        return f"INFEASIBLE: {exc}\n", EXIT_NO_SOLUTION
    return format_reduced(inst), EXIT_OK


def _cmd_verify(args) -> tuple[str, int]:
    g = _load_graph(args.file)
    sol = [] if args.solution.strip() == "EMPTYSET" else _vertex_list(args.solution)
    try:
        report = verify_solution(g, sol, args.mode)
    except KeyError as exc:
        raise InputError(str(exc)) from exc
    return report.describe(), EXIT_OK if report.ok else EXIT_NO_SOLUTION


def _cmd_convert(args) -> tuple[str, int]:
    g, _ = digraph_to_alternating(decode_digraph(_read(args.from_digraph)))
    return encode_instance(g), EXIT_OK


def _cmd_oracle(args) -> tuple[str, int]:
    g = _load_graph(args.file)
    try:
        family = oracle_minimal_mfvs_family(g, args.k)
    except OracleCapExceeded as exc:
        raise InputError(str(exc)) from exc
    return format_family(family), EXIT_OK if family else EXIT_NO_SOLUTION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dualfvs", description=__doc__.splitlines()[0])
    parser.add_argument("--out", help="write output here instead of standard output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="find one solution of size <= k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["dfvs", "mfvs"], default="dfvs")
    p.add_argument("file")
    p.set_defaults(run=_cmd_solve)

    p = sub.add_parser("enum", help="list all minimal solutions of size <= k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algo", choices=["cover", "compression", "mfvs"], default="cover")
    p.add_argument("file")
    p.set_defaults(run=_cmd_enum)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, default=2)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--simple", action="store_true")
    p.set_defaults(run=_cmd_gen)

    p = sub.add_parser("reduce", help="apply the reduction rules")
    p.add_argument("--reference", default="", help="comma-separated reference vertices")
    p.add_argument("file")
    p.set_defaults(run=_cmd_reduce)

    p = sub.add_parser("verify", help="check a solution")
    p.add_argument("--solution", required=True, help='space-separated ids, e.g. "1 4"')
    p.add_argument("--mode", choices=["valid", "minimal"], default="valid")
    p.add_argument("file")
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("convert", help="digraph to alternating-cycle instance")
    p.add_argument("--from-digraph", required=True, metavar="FILE")
    p.set_defaults(run=_cmd_convert)

    p = sub.add_parser("oracle", help="brute-force minimal solution family")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(run=_cmd_oracle)

    for name in ("solve", "enum", "gen", "reduce", "verify", "convert", "oracle"):
        sub.choices[name].add_argument("--out", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT_ERROR if exc.code else EXIT_OK
    try:
        text, code = args.run(args)
    except (InputError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
