"""Directed power domination and the red/blue coloring formulation.

Rules D1/D2 mirror the undirected ones on out-neighborhoods. A feasible
set corresponds to a valid coloring of the arcs: red arcs record who
dominated whom, origins (red in-degree 0) are the solution, and the
validity conditions (degree limits, antiparallel exclusion, no
dependency cycle) are exactly what makes the record replayable.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable

from .graph import DirectedGraph
from .propagation import directed_closure

RED = "R"
BLUE = "B"


@dataclass(frozen=True)
class Coloring:
    """Total red/blue assignment over the arcs of a digraph."""

    red: frozenset
    blue: frozenset

    @classmethod
    def from_dict(cls, assignment) -> "Coloring":
        red = frozenset(a for a, c in assignment.items() if c == RED)
        blue = frozenset(a for a, c in assignment.items() if c == BLUE)
        return cls(red=red, blue=blue)

    def color(self, arc) -> str:
        if arc in self.red:
            return RED
        if arc in self.blue:
            return BLUE
        raise KeyError(f"arc {arc} not colored")


@dataclass(frozen=True)
class ValidityReport:
    ok: bool
    rule: str | None = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


def is_valid_coloring(D: DirectedGraph, C: Coloring) -> ValidityReport:
    """Check the three validity conditions, reporting the first violation.

    (1) No antiparallel red pair. (2) Red in-degree at most 1, and a node
    with a red in-arc has red out-degree at most 1. (3) No dependency
    cycle: a closed mixed walk with red arcs forward, blue arcs backward,
    and no two consecutive blues.
    """
    if C.red & C.blue or C.red | C.blue != D.arcs:
        raise ValueError("coloring must assign every arc exactly one color")
    for u, v in sorted(C.red):
        if (v, u) in C.red:
            return ValidityReport(False, "antiparallel-red", ((u, v), (v, u)))
    red_in = [0] * D.n
    red_out = [0] * D.n
    for u, v in C.red:
        red_out[u] += 1
        red_in[v] += 1
    for v in range(D.n):
        if red_in[v] > 1:
            return ValidityReport(False, "red-in-degree", v)
        if red_in[v] == 1 and red_out[v] > 1:
            return ValidityReport(False, "red-out-degree", v)
    cyc = _dependency_cycle(D, C)
    if cyc is not None:
        return ValidityReport(False, "dependency-cycle", cyc)
    return ValidityReport(True)


def _dependency_cycle(D: DirectedGraph, C: Coloring):
    """Cycle in the walk graph on (node, last-arc-color) states, if any.

    Traversing red arc (u, v) is allowed after anything and lands in
    state (v, R); traversing blue arc (u, v) backward, i.e. stepping
    v -> u, is allowed only from (v, R) and lands in (u, B). A dependency
    cycle exists iff this state graph has a directed cycle.
    """
    succ: dict = {}
    for u, v in C.red:
        succ.setdefault((u, RED), []).append(((v, RED), (u, v)))
        succ.setdefault((u, BLUE), []).append(((v, RED), (u, v)))
    for u, v in C.blue:
        succ.setdefault((v, RED), []).append(((u, BLUE), (u, v)))
    # Iterative DFS cycle detection with path recovery.
    color = {}  # state -> 1 in progress, 2 done
    for start in sorted(succ):
        if color.get(start):
            continue
        stack = [(start, iter(succ.get(start, ())))]
        color[start] = 1
        path = [start]
        via = {}
        while stack:
            state, it = stack[-1]
            advanced = False
            for nxt, arc in it:
                if color.get(nxt) == 1:
                    i = path.index(nxt)
                    return [via[s] for s in path[i + 1 :]] + [arc]
                if not color.get(nxt):
                    color[nxt] = 1
                    via[nxt] = arc
                    path.append(nxt)
                    stack.append((nxt, iter(succ.get(nxt, ()))))
                    advanced = True
                    break
            if not advanced:
                color[state] = 2
                path.pop()
                stack.pop()
    return None


def origins(D: DirectedGraph, C: Coloring) -> frozenset[int]:
    """Nodes with no incoming red arc."""
    entered = {v for _, v in C.red}
    return frozenset(range(D.n)) - frozenset(entered)


def directed_closure_steps(D: DirectedGraph, S: Iterable[int]):
    """Canonical domination schedule: list of (actor, dominated) red pairs.

    Seeds dominate themselves and their out-neighbors first (lowest seed
    id wins shared targets); then the forcing rule fires lowest actor id
    first. Nodes of S never appear as the dominated end.
    """
    S = sorted(set(S))
    dom = [False] * D.n
    for v in S:
        dom[v] = True
    steps = []
    for v in S:
        for w in D.out_neighbors(v):
            if not dom[w]:
                dom[w] = True
                steps.append((v, w))
    undom = [sum(1 for u in D.out_neighbors(v) if not dom[u]) for v in range(D.n)]
    heap = [v for v in range(D.n) if dom[v] and undom[v] == 1]
    heapq.heapify(heap)
    while heap:
        v = heapq.heappop(heap)
        if not dom[v] or undom[v] != 1:
            continue
        w = next(u for u in D.out_neighbors(v) if not dom[u])
        dom[w] = True
        steps.append((v, w))
        for x in D.in_neighbors(w):
            undom[x] -= 1
            if dom[x] and undom[x] == 1:
                heapq.heappush(heap, x)
        if undom[w] == 1:
            heapq.heappush(heap, w)
    return steps


def coloring_from_domination(D: DirectedGraph, S: Iterable[int]) -> Coloring:
    """Record how S power dominates V as a coloring.

    Arc (v, w) goes red iff the canonical schedule dominates w via v;
    everything else is blue. The origins of the result are exactly the
    red-in-degree-0 nodes, a subset of closure seeds that still power
    dominates V.
    """
    S = frozenset(S)
    if directed_closure(D, S) != frozenset(range(D.n)):
        raise ValueError("S does not power dominate the digraph")
    red = frozenset(directed_closure_steps(D, S))
    return Coloring(red=red, blue=D.arcs - red)
