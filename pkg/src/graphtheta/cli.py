"""Command-line front end.

Subcommands: index, scan, near-ties, verify, enum.  Exit codes:
0 success / statement verified, 1 verification counterexample,
2 usage or input errors.

Numeric fields in CSV output are printed with 9 significant digits;
JSON carries full binary64 round-trip values.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from contextlib import ExitStack

from . import __version__, survey, treegen
from .graphs import GraphError, is_connected
from .graph6 import parse_graph6, to_graph6
from .indices import DEFAULT_ZERO_TOL, index_report, sign_of_gap
from .smallgraphs import MAX_INTERNAL_ORDER, internal_universe, load_universe


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    n = int(text)
    return n, n


def _open_out(stack: ExitStack, path: str | None):
    if path is None or path == "-":
        return sys.stdout
    return stack.enter_context(open(path, "w", encoding="ascii"))


def _input_lines(stack: ExitStack, path: str | None):
    if path is None or path == "-":
        return sys.stdin
    return stack.enter_context(open(path, encoding="ascii"))


# --- subcommands ------------------------------------------------------

def _cmd_index(args) -> int:
    status = 0
    with ExitStack() as stack:
        out = _open_out(stack, args.out)
        rows = []
        for lineno, line in enumerate(_input_lines(stack, getattr(args, "in")), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                g = parse_graph6(line)
                if not is_connected(g):
                    raise GraphError("graph is not connected")
                r = index_report(g)
            except GraphError as exc:
                print(f"line {lineno}: {exc}", file=sys.stderr)
                status = 2
                continue
            rows.append(
                {
                    "graph6": line,
                    "n": g.n,
                    "m": g.m,
                    "randic": r.randic,
                    "sum_connectivity": r.sum_connectivity,
                    "abc": r.abc,
                    "abs": r.abs,
                    "gap": r.gap,
                    "sign": sign_of_gap(r.gap, args.tol).value,
                }
            )
        if args.format == "json":
            json.dump(rows, out, indent=2)
            out.write("\n")
        else:
            out.write("# schema: index-v1\n")
            out.write("graph6,n,m,randic,sum_connectivity,abc,abs,gap,sign\n")
            for r in rows:
                out.write(
                    f"{r['graph6']},{r['n']},{r['m']},{_fmt(r['randic'])},"
                    f"{_fmt(r['sum_connectivity'])},{_fmt(r['abc'])},{_fmt(r['abs'])},"
                    f"{_fmt(r['gap'])},{r['sign']}\n"
                )
    return status


def _cmd_scan(args) -> int:
    lo, hi = _parse_range(args.range)
    if not 3 <= lo <= hi:
        print(f"invalid scan range {args.range}", file=sys.stderr)
        return 2
    records = [
        survey.classify_trees(
            n, tol=args.tol, workers=args.workers, witness_cap=args.witness_cap
        )
        for n in range(lo, hi + 1)
    ]
    with ExitStack() as stack:
        out = _open_out(stack, args.out)
        if args.format == "json":
            json.dump([dataclasses.asdict(r) for r in records], out, indent=2)
            out.write("\n")
        else:
            out.write("# schema: scan-v1\n")
            out.write(
                "n,total,positive,negative,zero,negative_ratio,"
                "min_abs_gap,min_abs_gap_graph6\n"
            )
            for r in records:
                out.write(
                    f"{r.order},{r.total},{r.positive},{r.negative},{r.zero},"
                    f"{_fmt(r.negative_ratio)},{_fmt(r.min_abs_gap)},"
                    f"{r.min_abs_gap_graph6}\n"
                )
        if args.witness_out:
            with open(args.witness_out, "w", encoding="ascii") as wf:
                for r in records:
                    wf.write(f"# n={r.order} negative={r.negative}"
                             f" listed={len(r.negative_witnesses)}\n")
                    for g6 in r.negative_witnesses:
                        wf.write(g6 + "\n")
    return 0


def _cmd_near_ties(args) -> int:
    ties = survey.find_near_ties(args.n, args.top_k)
    with ExitStack() as stack:
        out = _open_out(stack, args.out)
        if args.format == "json":
            json.dump([dataclasses.asdict(t) for t in ties], out, indent=2)
            out.write("\n")
        else:
            out.write("# schema: near-ties-v1\n")
            out.write("graph6,abc,abs,abs_gap\n")
            for t in ties:
                out.write(f"{t.graph6},{_fmt(t.abc)},{_fmt(t.abs)},{_fmt(t.abs_gap)}\n")
    return 0


def _universes_for(args, min_order: int) -> list:
    ext = getattr(args, "in")
    if ext:
        if args.order is None:
            raise GraphError("--order is required with --in")
        return [load_universe(ext, args.order)]
    hi = args.max_order
    if hi > MAX_INTERNAL_ORDER:
        raise GraphError(
            f"internal universes stop at order {MAX_INTERNAL_ORDER}; "
            "use --in for larger orders"
        )
    return [internal_universe(n) for n in range(min_order, hi + 1)]


def _cmd_verify(args) -> int:
    if args.statement == "p2":
        report = survey.verify_subdivision_invariance(
            trials=args.trials, seed=args.seed, tol=1e-12
        )
    else:
        min_order = {"p1": 1, "t1": 5, "t2": 1, "t3": 1}[args.statement]
        universes = _universes_for(args, min_order)
        if args.statement == "p1":
            report = survey.verify_min_degree2(universes, tol=1e-12)
        elif args.statement == "t1":
            report = survey.verify_line_graphs(universes, tol=args.tol)
        elif args.statement == "t2":
            report = survey.verify_no_degree2_bound(universes, tol=args.tol)
        else:
            report = survey.verify_isolated_degree2_bound(universes, tol=args.tol)
    with ExitStack() as stack:
        out = _open_out(stack, args.out)
        json.dump(dataclasses.asdict(report), out, indent=2)
        out.write("\n")
    if report.conclusion_failures:
        for g6 in report.conclusion_failures:
            print(f"counterexample: {g6}", file=sys.stderr)
        return 1
    return 0


def _cmd_enum(args) -> int:
    with ExitStack() as stack:
        out = _open_out(stack, args.out)
        if args.kind == "trees":
            treegen.write_graph6_stream(args.n, out)
        else:
            for g in internal_universe(args.n):
                out.write(to_graph6(g) + "\n")
    return 0


# --- parser -----------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=DEFAULT_ZERO_TOL,
                   help="zero tolerance for the gap sign (default 1e-9)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphtheta",
        description="Degree-based index engine and exhaustive ABC-ABS gap surveys",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="index values for graph6 input")
    p.add_argument("--in", default=None, help="graph6 file (default stdin)")
    _add_common(p)
    p.set_defaults(func=_cmd_index)

    p = sub.add_parser("scan", help="sign census over all trees of each order")
    p.add_argument("range", help="order range, e.g. 3..15 or 11")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--witness-cap", type=int, default=survey.DEFAULT_WITNESS_CAP)
    p.add_argument("--witness-out", default=None,
                   help="dump negative witnesses as graph6 lines")
    _add_common(p)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("near-ties", help="trees with the smallest |ABC-ABS|")
    p.add_argument("n", type=int)
    p.add_argument("--top-k", type=int, default=4)
    _add_common(p)
    p.set_defaults(func=_cmd_near_ties)

    p = sub.add_parser("verify", help="verify a statement over a universe")
    p.add_argument("statement", choices=["p1", "p2", "t1", "t2", "t3"])
    p.add_argument("--max-order", type=int, default=6,
                   help="largest internal universe order")
    p.add_argument("--in", default=None, help="external graph6 universe")
    p.add_argument("--order", type=int, default=None,
                   help="expected order of the external universe")
    p.add_argument("--trials", type=int, default=10_000, help="p2 trials")
    p.add_argument("--seed", type=int, default=0, help="p2 RNG seed")
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enum", help="emit a graph family as graph6 lines")
    p.add_argument("kind", choices=["trees", "connected"])
    p.add_argument("n", type=int)
    _add_common(p)
    p.set_defaults(func=_cmd_enum)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
