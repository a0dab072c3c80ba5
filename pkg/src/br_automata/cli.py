"""Command-line interface.

Exit status is 0 on success, 1 on a domain error (infeasible rule, tied
best responses, ...) and 2 on a usage error.  Errors are reported on stderr
as JSON objects ``{"error": ..., "message": ...}``.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import io
from .circuits import enumerate_fundamental_pairs
from .core import RegularGraph, induced_rule
from .enumeration import census, classify_rule, violating_pair
from .errors import BRError
from .geometry import induced_by_game, synthesize_matrix
from .plot import Palette, render_spacetime
from .simulator import random_config, run, wolfram_numbers


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


_INLINE_RULE = re.compile(r"^k=(\d+),d=(\d+):(.*)$")


def _load_rule(spec: str):
    m = _INLINE_RULE.match(spec.strip())
    if m:
        return io.rule_from_text(m.group(3), int(m.group(1)), int(m.group(2)))
    return io.rule_from_json(_load_json(spec))


def _load_json(path: str):
    try:
        return io.load(path)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read {path}: {e}")


def _load_graph(spec: str) -> RegularGraph:
    m = re.match(r"^(circle|circle_with_self):(\d+)$", spec)
    if m:
        n = int(m.group(2))
        return RegularGraph.circle(n) if m.group(1) == "circle" else RegularGraph.circle_with_self(n)
    return io.graph_from_json(_load_json(spec))


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_classify(args) -> int:
    F = _load_rule(args.rule)
    result = {"realizable": classify_rule(F)}
    if F.d == 2:
        pair = violating_pair(F)
        result["violating_pair"] = list(pair) if pair else None
    if args.exact:
        result["induced_by_game"] = induced_by_game(F)
    _emit(io.dumps(result), args.output)
    return 0


def cmd_synthesize(args) -> int:
    F = _load_rule(args.rule)
    M = synthesize_matrix(F)
    _emit(io.dumps(io.matrix_to_json(M)), args.output)
    return 0


def cmd_census(args) -> int:
    jobs = args.jobs or int(os.environ.get("BR_AUTOMATA_JOBS", "1"))
    c = census(args.k, args.d, jobs=jobs, witness=args.witness, exact=args.exact)
    _emit(io.dumps(io.census_to_json(c)), args.output)
    return 0


def cmd_simulate(args) -> int:
    if (args.rule is None) == (args.matrix is None):
        raise UsageError("give exactly one of --rule and --matrix")
    G = _load_graph(args.graph)
    if args.rule is not None:
        F = _load_rule(args.rule)
    else:
        F = induced_rule(io.matrix_from_json(_load_json(args.matrix)), G.d)
    if args.init:
        c0 = tuple(int(t) for t in args.init.split())
    else:
        c0 = random_config(G.n, F.k, args.seed)
    T = run(G, F, c0, args.steps, stop_at_cycle=args.plot is None)
    summary = {
        "n": G.n,
        "steps": len(T.configs) - 1,
        "transient": T.transient,
        "period": T.period,
        "initial": list(c0),
    }
    if args.plot:
        data = render_spacetime(T, Palette.default(F.k), args.format, args.scale)
        Path(args.plot).write_bytes(data)
        summary["plot"] = args.plot
    _emit(io.dumps(summary), args.output)
    return 0


def cmd_catalog(args) -> int:
    _emit(io.dumps(io.catalog_to_json(enumerate_fundamental_pairs(args.k))), args.output)
    return 0


def cmd_wolfram(args) -> int:
    F = _load_rule(args.rule)
    _emit(io.dumps({"numbers": sorted(wolfram_numbers(F, args.mode))}), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="br-automata", description="Best-response games as regular automata.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    rule_help = "rule JSON file, or inline 'k=K,d=D:o1 o2 ...'"

    s = sub.add_parser("classify", help="decide whether a rule is a best-response game")
    s.add_argument("rule", help=rule_help)
    s.add_argument("--exact", action="store_true",
                   help="also solve for a witness game (differs from pairwise for k >= 4)")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("synthesize", help="write a payoff matrix inducing a rule")
    s.add_argument("rule", help=rule_help)
    s.set_defaults(func=cmd_synthesize)

    s = sub.add_parser("census", help="count realizable rules for (k, d)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--witness", action="store_true", help="include a matrix per class")
    s.add_argument("--jobs", type=int, default=None)
    s.add_argument("--exact", action="store_true", help="keep only classes with a witness game")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("simulate", help="run a rule on a regular graph")
    s.add_argument("--rule", help=rule_help)
    s.add_argument("--matrix", help="payoff matrix JSON; the rule is its induced rule")
    s.add_argument("--graph", required=True,
                   help="graph JSON file, or circle:N / circle_with_self:N")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--init", help="initial states, space separated (overrides --seed)")
    s.add_argument("--steps", type=int, default=100)
    s.add_argument("--plot", help="write a space-time plot here")
    s.add_argument("--format", choices=("pgm", "svg"), default="pgm")
    s.add_argument("--scale", type=int, default=None)
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("catalog", help="fundamental unacceptable pairs on k strategies")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("wolfram", help="elementary CA numbers of a two-strategy rule")
    s.add_argument("rule", help=rule_help)
    s.add_argument("--mode", choices=("circle", "circle_with_self"), default="circle")
    s.set_defaults(func=cmd_wolfram)

    for action in sub.choices.values():
        action.add_argument("-o", "--output", help="write the JSON result here")
    return p


def _fail(kind: str, message: str, status: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return status


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as e:
        return _fail("usage", str(e), 2)
    except BRError as e:
        return _fail(type(e).__name__, str(e), 1)


if __name__ == "__main__":
    sys.exit(main())
