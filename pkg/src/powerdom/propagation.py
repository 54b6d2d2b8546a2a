"""Power domination closure engine.

Rule 1: a node of S dominates itself and its neighbors. Rule 2: a
dominated node with exactly one undominated neighbor dominates that
neighbor. ``closure`` computes the least fixpoint of both rules; it is
order-independent, and the canonical schedule (lowest actor id first)
makes traces reproducible.

The inner loop lives in a compiled kernel (``powerdom._closure``) with a
pure-Python twin (``powerdom._closure_py``). Set POWERDOM_PURE_PYTHON=1
to force the fallback.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graph import DirectedGraph, UndirectedGraph, exterior

if os.environ.get("POWERDOM_PURE_PYTHON") == "1":
    from . import _closure_py as _kernel
else:
    try:
        from . import _closure as _kernel  # type: ignore[no-redef]
    except ImportError:
        from . import _closure_py as _kernel  # type: ignore[no-redef]

KERNEL = "compiled" if _kernel.COMPILED else "python"


def _seed_mask(n: int, S: Iterable[int]) -> np.ndarray:
    seed = np.zeros(n, dtype=np.uint8)
    for v in S:
        if not 0 <= v < n:
            raise ValueError(f"node id {v} out of range [0, {n})")
        seed[v] = 1
    return seed


def closure(G: UndirectedGraph, S: Iterable[int]) -> frozenset[int]:
    """P_S: all nodes power dominated by S."""
    indptr, indices = G.csr
    dom = _kernel.closure_mask(indptr, indices, G.n, _seed_mask(G.n, S))
    return frozenset(int(v) for v in np.nonzero(dom)[0])


def directed_closure(D: DirectedGraph, S: Iterable[int]) -> frozenset[int]:
    """Directed P_S: Rules 1 and 2 applied to out-neighborhoods."""
    out_indptr, out_indices, in_indptr, in_indices = D.csr
    dom = _kernel.directed_closure_mask(
        out_indptr, out_indices, in_indptr, in_indices, D.n, _seed_mask(D.n, S)
    )
    return frozenset(int(v) for v in np.nonzero(dom)[0])


def is_feasible(G: UndirectedGraph, S: Iterable[int]) -> bool:
    return len(closure(G, S)) == G.n


@dataclass
class DominationTrace:
    """Staged closure record.

    ``stages[i]`` is the dominated set after i applications of Rule 2;
    stage 0 is S with its neighborhood. ``steps`` holds one entry per rule
    application as (rule, actor, newly dominated nodes); ``exteriors[i]``
    is |ext(stages[i])|.
    """

    stages: list
    steps: list
    exteriors: list

    @property
    def closure(self) -> frozenset[int]:
        return self.stages[-1]

    def to_dict(self) -> dict:
        return {
            "stages": [sorted(s) for s in self.stages],
            "steps": [
                {"rule": rule, "actor": actor, "added": sorted(added)}
                for rule, actor, added in self.steps
            ],
            "exteriors": list(self.exteriors),
        }


def closure_trace(G: UndirectedGraph, S: Iterable[int]) -> DominationTrace:
    """Closure with the full staged record, canonical lowest-id schedule."""
    S = sorted(set(S))
    _seed_mask(G.n, S)  # range check
    dom = [False] * G.n
    steps = []
    for v in S:
        added = [w for w in (v, *G.neighbors(v)) if not dom[w]]
        for w in added:
            dom[w] = True
        steps.append(("R1", v, frozenset(added)))
    undom = [sum(1 for u in G.neighbors(v) if not dom[u]) for v in range(G.n)]
    stages = [frozenset(v for v in range(G.n) if dom[v])]
    heap = [v for v in range(G.n) if dom[v] and undom[v] == 1]
    heapq.heapify(heap)
    while heap:
        v = heapq.heappop(heap)
        if not dom[v] or undom[v] != 1:
            continue
        w = next(u for u in G.neighbors(v) if not dom[u])
        dom[w] = True
        steps.append(("R2", v, frozenset({w})))
        stages.append(stages[-1] | {w})
        for x in G.neighbors(w):
            undom[x] -= 1
            if dom[x] and undom[x] == 1:
                heapq.heappush(heap, x)
        if undom[w] == 1:
            heapq.heappush(heap, w)
    exteriors = [len(exterior(G, stage)) for stage in stages]
    return DominationTrace(stages=stages, steps=steps, exteriors=exteriors)


def closure_random_order(G: UndirectedGraph, S: Iterable[int], rng) -> frozenset[int]:
    """Closure computed with Rule 2 applied in rng-shuffled order.

    Exists to exercise order-independence in tests; the result always
    equals ``closure(G, S)``.
    """
    dom = set()
    for v in set(S):
        dom.add(v)
        dom.update(G.neighbors(v))
    while True:
        candidates = []
        for v in dom:
            un = [u for u in G.neighbors(v) if u not in dom]
            if len(un) == 1:
                candidates.append((v, un[0]))
        if not candidates:
            return frozenset(dom)
        v, w = candidates[rng.randrange(len(candidates))]
        dom.add(w)
