"""Brute-force exact solvers, the ground truth behind every other module.

Candidates are enumerated by increasing size, lexicographic within each
size, so the returned witness is canonical and exactness is certified by
exhaustion of all smaller sizes. The budget counts candidate sets, not
wall time, and is deterministic across machines.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceededError
from .graph import DirectedGraph, UndirectedGraph
from .propagation import closure, directed_closure

DEFAULT_BUDGET = 10**8


@dataclass
class ExactResult:
    opt_size: int
    witness: frozenset
    explored: int


def _enumerate(n, feasible, size_cap, budget, mandatory=()):
    """Smallest feasible subset of range(n) containing all mandatory nodes."""
    mandatory = sorted(set(mandatory))
    free = [v for v in range(n) if v not in set(mandatory)]
    explored = 0
    for size in range(len(mandatory), min(size_cap, n) + 1):
        for extra in combinations(free, size - len(mandatory)):
            explored += 1
            if explored > budget:
                raise BudgetExceededError(explored - 1, size - 1)
            candidate = frozenset(mandatory) | frozenset(extra)
            if feasible(candidate):
                return ExactResult(size, candidate, explored)
    raise BudgetExceededError(explored, min(size_cap, n))


def exact_pds(G: UndirectedGraph, size_cap=None, budget=DEFAULT_BUDGET) -> ExactResult:
    """Minimum power dominating set by exhaustive search."""
    cap = G.n if size_cap is None else size_cap
    return _enumerate(G.n, lambda S: len(closure(G, S)) == G.n, cap, budget)


def exact_directed_pds(D: DirectedGraph, size_cap=None, budget=DEFAULT_BUDGET) -> ExactResult:
    """Minimum directed power dominating set.

    Nodes with in-degree 0 belong to every feasible set (nothing can ever
    dominate them), so the search fixes them up front.
    """
    cap = D.n if size_cap is None else size_cap
    mandatory = [v for v in range(D.n) if D.in_degree(v) == 0]
    return _enumerate(
        D.n, lambda S: len(directed_closure(D, S)) == D.n, cap, budget, mandatory
    )


def exact_dominating_set(G: UndirectedGraph, size_cap=None, budget=DEFAULT_BUDGET) -> ExactResult:
    """Classical minimum dominating set (no propagation)."""
    closed = [1 << v for v in range(G.n)]
    for u, v in G.edges:
        closed[u] |= 1 << v
        closed[v] |= 1 << u
    full = (1 << G.n) - 1

    def feasible(S):
        mask = 0
        for v in S:
            mask |= closed[v]
        return mask == full

    cap = G.n if size_cap is None else size_cap
    return _enumerate(G.n, feasible, cap, budget)
