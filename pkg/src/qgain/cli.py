"""Command-line front end.

Exit status: 0 success, 1 input error, 2 a mathematical invariant failed
(bound violation or disagreement between rank oracles).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .gain_graph import GraphError, normalize_to_spanning_tree, switch
from .graph_metrics import girth
from .qgg import QggError, format_qgg, parse_theta, read_qgg
from .qlinalg import AdjointRankError, rank_adjoint, rank_exact
from .theorem import (MAX_ENUMERATION_N, BudgetExceededError, Q8Exhaustive, Q8Sampled,
                      RationalUnitSampled, check_theorem, enumerate_and_check,
                      generate_extremal_complete_bipartite, generate_extremal_cycle,
                      random_q8_unit, random_rational_unit)

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _emit(obj):
    print(json.dumps(obj, sort_keys=True))


def cmd_rank(args) -> int:
    doc = read_qgg(args.file, lenient=args.lenient)
    if args.method == "exact":
        if not doc.exact:
            raise QggError("exact rank needs exact unit gains; use --method adjoint")
        res = rank_exact(doc.adjacency())
        _emit({"method": "exact", "rank": res.rank,
               "pivot_trace": [list(p) for p in res.pivot_trace]})
    else:
        res = rank_adjoint(doc.adjacency(), tol=args.tol)
        _emit({"method": "adjoint", "rank": res.rank, "tol": args.tol})
    return EXIT_OK


def cmd_girth(args) -> int:
    g = read_qgg(args.file).to_gain_graph()
    report = girth(g)
    _emit(report.to_dict())
    if report.acyclic and args.require_cycle:
        return EXIT_INPUT
    return EXIT_OK


def cmd_check(args) -> int:
    g = read_qgg(args.file).to_gain_graph()
    report = check_theorem(g)
    _emit(report.to_dict())
    return EXIT_OK if report.ok else EXIT_INVARIANT


def cmd_gen(args) -> int:
    if args.kind == "cycle":
        if len(args.params) != 1:
            raise UsageError("gen cycle takes one parameter: the even length")
        try:
            g = generate_extremal_cycle(args.params[0])
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        if len(args.params) != 2:
            raise UsageError("gen kpq takes two parameters: p q")
        p, q = args.params
        rng = np.random.default_rng(args.seed)
        draw = random_q8_unit if args.units == "q8" else random_rational_unit
        try:
            g = generate_extremal_complete_bipartite(
                p, q, [draw(rng) for _ in range(p)], [draw(rng) for _ in range(q)])
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    sys.stdout.write(format_qgg(g))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if not 3 <= args.max_n <= MAX_ENUMERATION_N:
        raise UsageError(f"--max-n must be between 3 and {MAX_ENUMERATION_N}")
    if args.gains == "q8":
        mode = Q8Sampled(args.samples, args.seed) if args.samples else \
            Q8Exhaustive(downgrade_samples=args.downgrade_samples, seed=args.seed)
    else:
        mode = RationalUnitSampled(args.samples or 5, args.seed)
    summary = enumerate_and_check(args.max_n, mode, min_n=args.min_n, budget=args.budget,
                                  allow_downgrade=not args.no_downgrade)
    _emit(summary.to_dict(include_instances=args.list_equality))
    return EXIT_OK if not summary.violations else EXIT_INVARIANT


def cmd_switch(args) -> int:
    g = read_qgg(args.file).to_gain_graph()
    if args.normalize_tree:
        out, _ = normalize_to_spanning_tree(g)
    else:
        theta = parse_theta(Path(args.theta).read_text(encoding="utf-8"), g.n)
        out = switch(g, theta)
    sys.stdout.write(format_qgg(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="qgain", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("rank", help="rank of the adjacency matrix")
    p.add_argument("file")
    p.add_argument("--method", choices=("exact", "adjoint"), default="exact")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--lenient", action="store_true", help="accept decimal, near-unit gains")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("girth", help="girth with a witness cycle")
    p.add_argument("file")
    p.add_argument("--require-cycle", action="store_true")
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("check", help="girth-rank bound and equality case")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="write an extremal instance in qgg format")
    p.add_argument("kind", choices=("cycle", "kpq"))
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--units", choices=("q8", "rational"), default="q8")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enumerate", help="check the bound over all small graphs")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=3)
    p.add_argument("--gains", choices=("q8", "rational"), default="q8")
    p.add_argument("--samples", type=int, default=0,
                   help="gain samples per graph; 0 means exhaustive (q8 only)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=10 ** 7,
                   help="largest 8^|E| enumerated exhaustively")
    p.add_argument("--downgrade-samples", type=int, default=50)
    p.add_argument("--no-downgrade", action="store_true",
                   help="fail instead of sampling when the budget is exceeded")
    p.add_argument("--list-equality", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("switch", help="apply a switching function")
    p.add_argument("file")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--normalize-tree", action="store_true")
    grp.add_argument("--theta")
    p.set_defaults(func=cmd_switch)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (QggError, GraphError, OSError, BudgetExceededError) as exc:
        print(f"qgain: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AdjointRankError as exc:
        print(f"qgain: invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    raise SystemExit(main())
