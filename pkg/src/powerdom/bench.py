"""Benchmark suites reproducing the ratio-gap experiments.

Each suite yields (instance_id, solve callable); rows are one per
(instance, method) with the fixed column order
instance,method,size,opt_or_lb,ratio,feasible. Results are deterministic
given the seeds and sorted by instance id, so CSV outputs diff cleanly.
"""

from __future__ import annotations

import csv
import io as _stdio
import json
from concurrent.futures import ThreadPoolExecutor

from .exact import exact_pds
from .generators import (
    block_centers,
    gen_greedy_bad,
    gen_grid,
    gen_minrep_random,
    minrep_opt,
    reduce_minrep_to_pds,
)
from .heuristics import TieBreak, greedy
from .propagation import is_feasible
from .twd import twd_approx

COLUMNS = ["instance", "method", "size", "opt_or_lb", "ratio", "feasible"]


def _row(instance, method, G, solution, opt_or_lb):
    size = len(set(solution))
    return {
        "instance": instance,
        "method": method,
        "size": size,
        "opt_or_lb": opt_or_lb,
        "ratio": round(size / opt_or_lb, 4) if opt_or_lb else None,
        "feasible": is_feasible(G, set(solution)),
    }


def _suite_greedy_gap():
    # Adversarial greedy on the subdivided grid vs the first-column fixture.
    jobs = []
    for m in (2, 3, 4):
        def job(m=m):
            G = gen_greedy_bad(1, m)
            cols = 9 * m
            column = [r * cols + 0 for r in range(9)]
            assert is_feasible(G, column)
            tb = TieBreak(
                "adversarial-center-first", preferred=tuple(block_centers(1, m))
            )
            S = greedy(G, tb)
            return _row(f"greedy-bad-1x{m}", "greedy-adversarial", G, S, len(column))

        jobs.append((f"greedy-bad-1x{m}", job))
    return jobs


def _suite_grid():
    jobs = []
    for l in range(2, 5):
        for m in range(l, 5):
            def job(l=l, m=m):
                G, td = gen_grid(l, m)
                res = twd_approx(G, td)
                return _row(
                    f"grid-{l}x{m}",
                    "twd-approx",
                    G,
                    res.solution,
                    max(res.lower_bound, 1),
                )

            jobs.append((f"grid-{l}x{m}", job))
    return jobs


def _suite_reduction():
    jobs = []
    for seed in range(3):
        def job(seed=seed):
            # part_size=1 keeps the reduced graph small enough for exact
            # search with a tight cap; opt = minrep opt + 1 still holds.
            M = gen_minrep_random(2, 2, 1, 0.7, seed)
            G = reduce_minrep_to_pds(M)
            opt_m, _ = minrep_opt(M)
            res = exact_pds(G, size_cap=opt_m + 1)
            return _row(f"reduction-{seed}", "exact", G, res.witness, opt_m + 1)

        jobs.append((f"reduction-{seed}", job))
    return jobs


SUITES = {
    "greedy-gap": _suite_greedy_gap,
    "grid": _suite_grid,
    "reduction": _suite_reduction,
}


def run_suite(name: str, jobs: int = 1) -> list[dict]:
    try:
        suite = SUITES[name]()
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(lambda item: item[1](), suite))
    else:
        rows = [job() for _, job in suite]
    return sorted(rows, key=lambda r: (r["instance"], r["method"]))


def rows_to_csv(rows) -> str:
    out = _stdio.StringIO()
    writer = csv.DictWriter(out, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return out.getvalue()


def rows_to_json(rows) -> str:
    return json.dumps(rows, indent=2, sort_keys=True) + "\n"
