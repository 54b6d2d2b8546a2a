"""Strong and weak regions.

A region R is S-strong when R is not fully dominated even if everything
around it is handed over: R is not a subset of closure(S union nbr(R)).
Strong regions certify lower bounds, because any feasible extension of S
must pick a node inside R.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .graph import UndirectedGraph, neighborhood
from .propagation import closure, is_feasible


def is_strong(G: UndirectedGraph, S: Iterable[int], R: Iterable[int]) -> bool:
    S, R = frozenset(S), frozenset(R)
    if not R:
        return False
    return not R <= closure(G, S | neighborhood(G, R))


def shrink_to_minimal(G: UndirectedGraph, S: Iterable[int], R: Iterable[int]) -> frozenset[int]:
    """Shrink a strong region until no single node can be dropped.

    Nodes are tried in ascending id order and the scan restarts after
    every successful removal, so the certificate is deterministic.
    """
    S, R = frozenset(S), frozenset(R)
    if not is_strong(G, S, R):
        raise ValueError("R is not S-strong")
    changed = True
    while changed:
        changed = False
        for v in sorted(R):
            if is_strong(G, S, R - {v}):
                R = R - {v}
                changed = True
                break
    return R


def every_solution_hits(G: UndirectedGraph, S: Iterable[int], R: Iterable[int]) -> bool:
    """Exhaustive check that every feasible S union S* picks from R minus S.

    Test oracle for ``is_strong``; enumerates candidate extensions by
    increasing size and stops at the first feasible counterexample.
    Limited to n <= 16.
    """
    if G.n > 16:
        raise ValueError(f"exhaustive check limited to n <= 16, got n = {G.n}")
    S, R = frozenset(S), frozenset(R)
    allowed = sorted(set(range(G.n)) - (R - S))
    for size in range(len(allowed) + 1):
        for extra in combinations(allowed, size):
            if is_feasible(G, S | set(extra)):
                return False
    return True
