"""Command-line surface.

Exit codes: 0 = yes/pass, 1 = no/fail, 2 = unknown (budget exhausted),
3 = usage or data error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import corpus, identities, textio
from .dismantling import (
    DEFAULT_SEARCH_BUDGET,
    Outcome,
    apply_move_unchecked,
    dismantles_onto,
    greedy_dismantling_certificate,
    move_error,
    s_collapse_search,
    ws_reduction_search,
)
from .graphs import GraphError, barycentric_graph
from .posets import (
    PosetError,
    barycentric_poset,
    clique_poset,
    comparability_graph,
    face_poset,
    order_complex,
)
from .simplicial import (
    ComplexError,
    barycentric_complex,
    clique_complex,
    inclusion_graph,
    one_skeleton,
)

EXIT_YES, EXIT_NO, EXIT_UNKNOWN, EXIT_ERROR = 0, 1, 2, 3

_PARSERS = {"graph": textio.parse_graph, "complex": textio.parse_complex,
            "poset": textio.parse_poset}
_FORMATTERS = {"graph": textio.format_graph, "complex": textio.format_complex,
               "poset": textio.format_poset}


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(kind: str, path: str):
    return _PARSERS[kind](_read(path))


def _kind_of(path: str, override: str | None) -> str:
    if override:
        return override
    for kind in _PARSERS:
        if path.endswith("." + kind):
            return kind
    raise GraphError(f"cannot infer structure kind of {path!r}; pass --kind")


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else fallback


def cmd_check(args) -> int:
    _load(args.kind, args.file)
    print(f"ok: {args.kind} {args.file}")
    return EXIT_YES


def cmd_reduce(args) -> int:
    g = _load("graph", args.file)
    target = _load("graph", args.target) if args.target else None
    budget = args.budget
    if args.mode == "dismantle":
        if target is None:
            cert = greedy_dismantling_certificate(g)
            if cert is None:
                print("no")
                return EXIT_NO
            print("yes")
            _emit(textio.format_move_certificate(cert), args.out)
            return EXIT_YES
        verdict = dismantles_onto(g, target, budget)
    elif args.mode == "s":
        if target is not None:
            raise GraphError("mode s searches for reduction to a point; drop --target")
        verdict = s_collapse_search(g, budget)
    else:
        verdict = ws_reduction_search(g, target, budget)
    print(f"{verdict.outcome.value} nodes={verdict.stats.nodes} budget={verdict.stats.budget}")
    if verdict.outcome is Outcome.YES:
        _emit(textio.format_move_certificate(verdict.certificate), args.out)
        return EXIT_YES
    return EXIT_NO if verdict.outcome is Outcome.NO else EXIT_UNKNOWN


_MAPS = {
    "delta-g": ("graph", "complex", clique_complex),
    "gamma": ("complex", "graph", inclusion_graph),
    "sk": ("complex", "graph", one_skeleton),
    "comp": ("poset", "graph", comparability_graph),
    "clique-poset": ("graph", "poset", clique_poset),
    "order-complex": ("poset", "complex", order_complex),
    "face-poset": ("complex", "poset", face_poset),
}

_BD = {"graph": barycentric_graph, "complex": barycentric_complex,
       "poset": barycentric_poset}


def cmd_map(args) -> int:
    if args.functor == "bd":
        kind = _kind_of(args.file, args.kind)
        result = _BD[kind](_load(kind, args.file))
        _emit(_FORMATTERS[kind](result), args.out)
        return EXIT_YES
    src, dst, fn = _MAPS[args.functor]
    result = fn(_load(src, args.file))
    _emit(_FORMATTERS[dst](result), args.out)
    return EXIT_YES


def cmd_certify(args) -> int:
    start = _load("graph", args.start)
    moves = textio.parse_moves(_read(args.certificate))
    cur = start
    for i, move in enumerate(moves):
        err = move_error(cur, move)
        if err:
            print(f"invalid at move {i}: {err}")
            return EXIT_NO
        cur = apply_move_unchecked(cur, move)
    if args.end:
        end = _load("graph", args.end)
        if cur != end:
            print("invalid: end graph does not match --end")
            return EXIT_NO
    print("valid")
    return EXIT_YES


def cmd_identities(args) -> int:
    reports = identities.run_property_suite(seed=args.seed, max_size=args.max_size,
                                            budget=args.budget, samples=args.samples)
    failed = False
    for r in reports:
        print(r.line())
        failed = failed or r.verdict == "fail"
    print(f"total={len(reports)} "
          f"fail={sum(r.verdict == 'fail' for r in reports)} "
          f"skip={sum(r.verdict == 'skipped' for r in reports)}")
    return EXIT_NO if failed else EXIT_YES


def cmd_corpus(args) -> int:
    if args.action == "list":
        for name in sorted(corpus.FIXTURES):
            fix = corpus.FIXTURES[name]
            print(f"{name} ({fix.kind}{', optional' if fix.optional else ''})")
        return EXIT_YES
    if args.action == "dump":
        if not args.name or args.name not in corpus.FIXTURES:
            raise GraphError(f"unknown fixture {args.name!r}")
        _emit(corpus.FIXTURES[args.name].payload(), args.out)
        return EXIT_YES
    assertions = corpus.verify_corpus()
    ok = True
    for a in assertions:
        print(a.line())
        ok = ok and a.passed
    return EXIT_YES if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagcalc",
        description="Graph dismantling, flag-complex collapse and poset weak "
                    "points with machine-checkable certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="parse and validate a structure file")
    p.add_argument("kind", choices=sorted(_PARSERS))
    p.add_argument("file")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("reduce", help="search for a reduction of a graph")
    p.add_argument("file")
    p.add_argument("--mode", choices=("s", "ws", "dismantle"), default="s")
    p.add_argument("--budget", type=int,
                   default=_env_int("FLAGCALC_BUDGET", DEFAULT_SEARCH_BUDGET))
    p.add_argument("--target")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("map", help="apply a structure-translating map")
    p.add_argument("functor", choices=sorted(_MAPS) + ["bd"])
    p.add_argument("file")
    p.add_argument("--kind", choices=sorted(_PARSERS))
    p.add_argument("--out")
    p.set_defaults(fn=cmd_map)

    p = sub.add_parser("certify", help="replay a graph move certificate")
    p.add_argument("certificate")
    p.add_argument("--start", required=True)
    p.add_argument("--end")
    p.set_defaults(fn=cmd_certify)

    p = sub.add_parser("identities", help="run the cross-structure property suite")
    p.add_argument("--seed", type=int, default=_env_int("FLAGCALC_SEED", 0))
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--samples", type=int, default=24)
    p.add_argument("--budget", type=int,
                   default=_env_int("FLAGCALC_BUDGET", DEFAULT_SEARCH_BUDGET))
    p.set_defaults(fn=cmd_identities)

    p = sub.add_parser("corpus", help="list, dump or verify the built-in fixtures")
    p.add_argument("action", choices=("verify", "list", "dump"))
    p.add_argument("name", nargs="?")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (GraphError, ComplexError, PosetError, textio.ParseError,
            FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
