"""Command-line front end.

Exit codes: 0 ok, 1 undefined operation or failed verification,
2 parse error, 3 set system not graphic.  Output is only written once the
whole command has succeeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import _core
from .errors import (
    InapplicableOperation,
    NotGraphic,
    OrbitTooLarge,
    ParseError,
    UnknownVertex,
)
from .graphs import SimpleGraph, parse_graph
from .orbit import DEFAULT_MAX_NODES, export_dot, full_orbit, pivot_orbit
from .setsystem import graph_of_ss, is_delta_matroid, parse_set_system, ss_of_matrix
from .verify import DEFAULT_SEED, SUITES, run_suite
from .vertexset import Ground
from .words import apply_word_graph, apply_word_simple, apply_word_ss, normalize, parse_word

EXIT_OK = 0
EXIT_UNDEFINED = 1
EXIT_PARSE = 2
EXIT_NOT_GRAPHIC = 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_PARSE) from None
    except UnicodeDecodeError:
        raise CliError(f"{path} is not valid UTF-8", EXIT_PARSE) from None


def _parse(kind: str, path: str, fn):
    try:
        return fn(_read(path))
    except (ParseError, UnknownVertex) as exc:
        raise CliError(f"{kind} {path}: {exc}", EXIT_PARSE) from None
    except ValueError as exc:
        raise CliError(f"{kind} {path}: {exc}", EXIT_PARSE) from None


def _word(text: str, ground: Ground):
    try:
        return parse_word(text, ground)
    except (ParseError, UnknownVertex) as exc:
        raise CliError(f"word: {exc}", EXIT_PARSE) from None


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_apply(args) -> int:
    if args.graph is not None:
        G = _parse("graph", args.graph, parse_graph)
        word = _word(args.word, G.ground)
        try:
            if args.simple:
                if not G.is_simple():
                    raise CliError("--simple needs a loopless graph", EXIT_PARSE)
                result = apply_word_simple(SimpleGraph(G.ground, G.rows), word)
            else:
                result = apply_word_graph(G, word)
        except InapplicableOperation as exc:
            raise CliError(f"undefined operation: {exc}", EXIT_UNDEFINED) from None
        text = result.to_text()
    else:
        if args.simple:
            raise CliError("--simple applies to graphs only", EXIT_PARSE)
        M = _parse("set system", args.ss, parse_set_system)
        text = apply_word_ss(M, _word(args.word, M.ground)).to_text()
    _emit(text, args.out)
    return EXIT_OK


def cmd_normalize(args) -> int:
    labels = args.vertices.replace(",", " ").split()
    try:
        ground = Ground(labels)
    except ValueError as exc:
        raise CliError(f"vertices: {exc}", EXIT_PARSE) from None
    _emit(f"{normalize(_word(args.word, ground), ground)}\n", args.out)
    return EXIT_OK


def cmd_convert(args) -> int:
    if args.graph is not None:
        text = ss_of_matrix(_parse("graph", args.graph, parse_graph)).to_text()
    else:
        M = _parse("set system", args.ss, parse_set_system)
        try:
            text = graph_of_ss(M).to_text()
        except NotGraphic as exc:
            raise CliError(f"not graphic: {exc}", EXIT_NOT_GRAPHIC) from None
    _emit(text, args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    M = _parse("set system", args.ss, parse_set_system)
    _emit(is_delta_matroid(M).render() + "\n", args.out)
    return EXIT_OK


def cmd_orbit(args) -> int:
    G = _parse("graph", args.graph, parse_graph)
    explore = full_orbit if args.full else pivot_orbit
    try:
        orbit = explore(G, all_pivots=args.all_pivots, max_nodes=args.max_nodes, workers=args.workers)
    except OrbitTooLarge as exc:
        raise CliError(str(exc), EXIT_UNDEFINED) from None
    if args.dot is not None:
        _emit(export_dot(orbit), args.dot)
    _emit(orbit.summary(), None)
    return EXIT_OK


def cmd_verify(args) -> int:
    failed = 0
    for res in run_suite(args.suite, max_n=args.max_n, seed=args.seed):
        print(res.line(), flush=True)
        failed += not res.passed
    print(f"backend: {_core.BACKEND}; {'all checks passed' if not failed else f'{failed} check(s) failed'}")
    return EXIT_OK if not failed else EXIT_UNDEFINED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pivotloop",
        description="Pivot and loop complementation on graphs and set systems over F2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apply", help="apply an operation word to a graph or set system")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="FILE")
    src.add_argument("--ss", metavar="FILE")
    p.add_argument("--word", required=True, help="e.g. '*{p,q} +{r}'; may be empty")
    p.add_argument("--simple", action="store_true", help="simple-graph semantics (loopless input)")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("normalize", help="print the normal form +{X} *{Y} +{Z} of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--vertices", required=True, help="comma or space separated labels")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("convert", help="graph -> set system, or set system -> graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="FILE")
    src.add_argument("--ss", metavar="FILE")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("check", help="test a set system for the delta-matroid exchange axiom")
    p.add_argument("--ss", metavar="FILE", required=True)
    p.add_argument("--delta-matroid", action="store_true", default=True)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("orbit", help="enumerate the orbit of a graph under elementary pivots")
    p.add_argument("--graph", metavar="FILE", required=True)
    p.add_argument("--full", action="store_true", help="also close under single-vertex loop complementation")
    p.add_argument("--all-pivots", action="store_true", help="record non-elementary pivot transitions too")
    p.add_argument("--dot", metavar="OUT", help="write the orbit graph in DOT format")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("verify", help="run the built-in verification suites")
    p.add_argument("--suite", default="small", choices=["small", *SUITES])
    p.add_argument("--max-n", type=int, default=4, help="largest vertex count for exhaustive checks")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_n", 1) < 1:
        print("error: --max-n must be positive", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
