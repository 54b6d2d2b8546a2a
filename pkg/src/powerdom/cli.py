"""Command-line front end.

Commands: solve, verify, trace, gen, bench. File formats are 1-based
(see :mod:`powerdom.io`); all JSON output uses 1-based ids too. Exit
codes: 0 ok, 1 usage or parse error, 2 verification failure, 3 search
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import bench as bench_mod
from . import io as pio
from .decomposition import to_nice
from .dp import dp_solve
from .errors import BudgetExceededError, DecompositionError, GraphError, ParseError
from .exact import exact_directed_pds, exact_pds
from .graph import DirectedGraph, UndirectedGraph
from .heuristics import MODES, TieBreak, cleanup, greedy, partition_approx, proximity_greedy
from .propagation import closure, closure_trace, directed_closure
from .twd import tree_exact, twd_approx

METHODS = (
    "exact",
    "twd-approx",
    "tree-exact",
    "greedy",
    "proximity",
    "cleanup",
    "partition",
    "directed-exact",
    "directed-dp",
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _ids_out(S):
    return [v + 1 for v in sorted(S)]


def _emit(payload: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for key in sorted(payload):
            print(f"{key}: {payload[key]}")


def _trace_payload(trace):
    d = trace.to_dict()
    return {
        "stages": [[v + 1 for v in stage] for stage in d["stages"]],
        "steps": [
            {
                "rule": s["rule"],
                "actor": s["actor"] + 1,
                "added": [v + 1 for v in s["added"]],
            }
            for s in d["steps"]
        ],
        "exteriors": d["exteriors"],
    }


def _build_parser():
    top = _Parser(prog="powerdom", description=__doc__)
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--no-time", action="store_true")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common])
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--td")
    p.add_argument("--tiebreak", choices=MODES, default="lexicographic")
    p.add_argument("--size-cap", type=int)
    p.add_argument("--budget", type=int, default=10**8)
    p.add_argument("--root", type=int)
    p.add_argument("--dump-states", action="store_true")

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--graph", required=True)
    p.add_argument("--set", dest="node_set", required=True)
    p.add_argument("--trace", action="store_true")

    p = sub.add_parser("trace", parents=[common])
    p.add_argument("--graph", required=True)
    p.add_argument("--set", dest="node_set", required=True)

    p = sub.add_parser("gen", parents=[common])
    p.add_argument("family", choices=(
        "grid", "triangle-chain", "augment", "greedy-bad", "proximity-bad",
        "minrep", "reduce-pds", "reduce-dpds",
    ))
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--qa", type=int, default=2)
    p.add_argument("--qb", type=int, default=2)
    p.add_argument("--part-size", type=int, default=2)
    p.add_argument("--p", type=float, default=0.7)
    p.add_argument("--lambda", dest="lam", type=int, default=4)
    p.add_argument("--in", dest="input")
    p.add_argument("--out", required=True)
    p.add_argument("--td-out")

    p = sub.add_parser("bench", parents=[common])
    p.add_argument("--suite", choices=sorted(bench_mod.SUITES), required=True)
    p.add_argument("--out-csv")
    p.add_argument("--out-json")
    p.add_argument("--jobs", type=int, default=1)
    return top


def _cmd_solve(args) -> int:
    directed = args.method in ("directed-exact", "directed-dp")
    G = pio.load_graph(args.graph, "directed" if directed else "undirected")
    lower_bound = None
    extra = {}
    start = time.perf_counter()
    if args.method == "exact":
        res = exact_pds(G, args.size_cap, args.budget)
        solution = res.witness
        lower_bound = res.opt_size
        extra["explored"] = res.explored
    elif args.method == "directed-exact":
        res = exact_directed_pds(G, args.size_cap, args.budget)
        solution = res.witness
        lower_bound = res.opt_size
        extra["explored"] = res.explored
    elif args.method == "twd-approx":
        if not args.td:
            raise _UsageError("--td is required for twd-approx")
        td = pio.load_td(args.td)
        res = twd_approx(G, td, args.root)
        solution = res.solution
        lower_bound = res.lower_bound
        extra["width"] = res.width
    elif args.method == "tree-exact":
        solution = tree_exact(G)
    elif args.method == "greedy":
        solution = greedy(G, TieBreak(args.tiebreak, args.seed))
    elif args.method == "proximity":
        solution = proximity_greedy(G, TieBreak(args.tiebreak, args.seed))
    elif args.method == "cleanup":
        picked = greedy(G, TieBreak(args.tiebreak, args.seed))
        solution = cleanup(G, picked)
    elif args.method == "partition":
        stats = {}
        solution = partition_approx(G, stats)
        extra["candidates"] = stats["candidates"]
    else:  # directed-dp
        if not args.td:
            raise _UsageError("--td is required for directed-dp")
        td = pio.load_td(args.td)
        census = [] if args.dump_states else None
        res = dp_solve(G, to_nice(td), census)
        solution = res.witness
        lower_bound = res.opt_size
        if census is not None:
            extra["states"] = census
    elapsed_ms = round((time.perf_counter() - start) * 1000, 3)

    solution = set(solution)
    if directed:
        feasible = len(directed_closure(G, solution)) == G.n
    else:
        feasible = len(closure(G, solution)) == G.n
    report = {
        "method": args.method,
        "solution": _ids_out(solution),
        "size": len(solution),
        "feasible": feasible,
        "lower_bound": lower_bound,
        "ratio_vs_lb": (
            round(len(solution) / lower_bound, 4) if lower_bound else None
        ),
        "seed": args.seed,
        **extra,
    }
    if not args.no_time:
        report["wall_time_ms"] = elapsed_ms
    _emit(report, args.format)
    return 0 if feasible else 2


def _cmd_verify(args) -> int:
    G = pio.load_graph(args.graph)
    S = pio.load_node_set(args.node_set)
    if isinstance(G, DirectedGraph):
        dominated = directed_closure(G, S)
    else:
        dominated = closure(G, S)
    missing = sorted(set(range(G.n)) - dominated)
    feasible = not missing
    report = {
        "set": _ids_out(S),
        "closure_size": len(dominated),
        "n": G.n,
        "feasible": feasible,
        "missing": [v + 1 for v in missing],
    }
    if args.trace and isinstance(G, UndirectedGraph):
        report["trace"] = _trace_payload(closure_trace(G, S))
    _emit(report, args.format)
    return 0 if feasible else 2


def _cmd_trace(args) -> int:
    G = pio.load_graph(args.graph, "undirected")
    S = pio.load_node_set(args.node_set)
    _emit(_trace_payload(closure_trace(G, S)), args.format)
    return 0


def _require(args, names):
    for name in names:
        if getattr(args, name) is None:
            raise _UsageError(f"--{name.replace('_', '-')} is required for {args.family}")


def _cmd_gen(args) -> int:
    from . import generators as g

    td = None
    if args.family == "grid":
        _require(args, ["rows", "cols"])
        out, td = g.gen_grid(args.rows, args.cols)
    elif args.family == "triangle-chain":
        _require(args, ["t"])
        out = g.gen_triangle_chain(args.t)
    elif args.family == "augment":
        _require(args, ["input"])
        out = g.gen_augmented(pio.load_graph(args.input, "undirected"))
    elif args.family == "greedy-bad":
        _require(args, ["l", "m"])
        out = g.gen_greedy_bad(args.l, args.m)
    elif args.family == "proximity-bad":
        _require(args, ["h", "m", "l"])
        out = g.gen_proximity_bad(args.h, args.m, args.l)
    elif args.family == "minrep":
        M = g.gen_minrep_random(args.qa, args.qb, args.part_size, args.p, args.seed)
        pio.save_minrep(M, args.out)
        return 0
    elif args.family == "reduce-pds":
        _require(args, ["input"])
        out = g.reduce_minrep_to_pds(pio.load_minrep(args.input), args.lam)
    else:  # reduce-dpds
        _require(args, ["input"])
        out = g.reduce_minrep_to_directed_pds(pio.load_minrep(args.input), args.lam)
    pio.save_graph(out, args.out)
    if args.td_out:
        if td is None:
            raise _UsageError(f"family {args.family} has no companion decomposition")
        pio.save_td(td, args.td_out)
    return 0


def _cmd_bench(args) -> int:
    rows = bench_mod.run_suite(args.suite, args.jobs)
    csv_text = bench_mod.rows_to_csv(rows)
    if args.out_csv:
        with open(args.out_csv, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(csv_text)
    if args.out_json:
        with open(args.out_json, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(bench_mod.rows_to_json(rows))
    if not args.out_csv and not args.out_json:
        sys.stdout.write(csv_text)
    if any(not row["feasible"] for row in rows):
        return 2
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "trace":
            return _cmd_trace(args)
        if args.command == "gen":
            return _cmd_gen(args)
        return _cmd_bench(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (_UsageError, ParseError, GraphError, DecompositionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
