"""Compare the compiled closure kernel against the pure-Python fallback.

Runs the same closure workloads through both kernels and prints a small
table of wall times and speedups. The two kernels share a signature, so
they are timed on identical CSR inputs; results are checked for equality
before any timing is reported.

Usage: python benchmarks/bench_closure.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from powerdom import _closure_py
from powerdom.generators import gen_greedy_bad, gen_grid, gen_random_graph

try:
    from powerdom import _closure

    KERNELS = [("compiled", _closure), ("python", _closure_py)]
except ImportError:
    KERNELS = [("python", _closure_py)]


def workloads():
    G, _ = gen_grid(40, 40)
    yield "grid-40x40-corner", G, [0]
    yield "grid-40x40-column", G, [r * 40 for r in range(40)]
    G = gen_greedy_bad(3, 3)
    yield "greedy-bad-3x3-column", G, [r * 27 for r in range(27)]
    G = gen_random_graph(2000, 0.002, 0)
    yield "random-2000-sparse", G, list(range(0, 2000, 100))


def run(kernel, G, seeds, repeat):
    indptr, indices = G.csr
    seed = np.zeros(G.n, dtype=np.uint8)
    for v in seeds:
        seed[v] = 1
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = kernel.closure_mask(indptr, indices, G.n, seed.copy())
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if len(KERNELS) == 1:
        print("compiled kernel unavailable; timing the python kernel only")
    print(f"{'workload':<24}" + "".join(f"{name:>12}" for name, _ in KERNELS) + f"{'speedup':>10}")
    for name, G, seeds in workloads():
        times = []
        masks = []
        for _, kernel in KERNELS:
            t, mask = run(kernel, G, seeds, args.repeat)
            times.append(t)
            masks.append(mask)
        for other in masks[1:]:
            assert (masks[0] == other).all(), f"kernel disagreement on {name}"
        cells = "".join(f"{t * 1000:>10.2f}ms" for t in times)
        speedup = f"{times[-1] / times[0]:>9.1f}x" if len(times) > 1 else f"{'n/a':>10}"
        print(f"{name:<24}{cells}{speedup}")


if __name__ == "__main__":
    main()
