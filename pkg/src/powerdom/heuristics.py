"""Greedy-family heuristics and the partition algorithm.

None of these carry a guarantee on general graphs; they exist to be
measured against the exact oracle and the decomposition-based bound.
Greedy returns its picks in insertion order because cleanup's default
scan order is exactly that order.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import UndirectedGraph
from .propagation import closure, is_feasible

MODES = ("lexicographic", "adversarial-center-first", "seeded-random")


@dataclass
class TieBreak:
    """Deterministic rule for choosing among equal-gain candidates.

    lexicographic: lowest node id. adversarial-center-first: any node
    from ``preferred`` (the adversary's scripted picks, lowest id
    first), otherwise the node farthest from everything picked so far
    (then lowest id) -- exercises worst-case greedy behavior.
    seeded-random: uniform choice from a seeded generator.
    """

    mode: str = "lexicographic"
    seed: int = 0
    preferred: tuple = ()

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown tie-break mode {self.mode!r}")
        self._rng = random.Random(self.seed)

    def choose(self, G: UndirectedGraph, picked, candidates) -> int:
        candidates = sorted(candidates)
        if len(candidates) == 1:
            return candidates[0]
        if self.mode == "lexicographic":
            return candidates[0]
        if self.mode == "seeded-random":
            return self._rng.choice(candidates)
        scripted = [v for v in candidates if v in set(self.preferred)]
        if scripted:
            return scripted[0]
        if not picked:
            return candidates[0]
        dist = _multi_source_bfs(G, picked)
        return max(candidates, key=lambda v: (dist[v], -v))


def _multi_source_bfs(G, sources):
    dist = [G.n + 1] * G.n
    q = deque()
    for s in sources:
        dist[s] = 0
        q.append(s)
    while q:
        v = q.popleft()
        for u in G.neighbors(v):
            if dist[u] > dist[v] + 1:
                dist[u] = dist[v] + 1
                q.append(u)
    return dist


def greedy(G: UndirectedGraph, tiebreak: TieBreak | None = None) -> list[int]:
    """Repeatedly add the node dominating the most new nodes until feasible."""
    tiebreak = tiebreak or TieBreak()
    S: list[int] = []
    dom = frozenset()
    while len(dom) < G.n:
        gains = {}
        for v in range(G.n):
            if v in S:
                continue
            gains[v] = len(closure(G, set(S) | {v}) - dom)
        best = max(gains.values())
        S.append(tiebreak.choose(G, S, [v for v, g in gains.items() if g == best]))
        dom = closure(G, S)
    return S


def proximity_greedy(G: UndirectedGraph, tiebreak: TieBreak | None = None) -> list[int]:
    """Greedy restricted to picks keeping the dominated set connected.

    A candidate qualifies if the closure after adding it induces a
    connected subgraph of G. When no candidate qualifies, one
    unrestricted greedy step is taken so the algorithm always finishes.
    """
    tiebreak = tiebreak or TieBreak()
    S: list[int] = []
    dom = frozenset()
    while len(dom) < G.n:
        gains = {}
        connected_gains = {}
        for v in range(G.n):
            if v in S:
                continue
            new_dom = closure(G, set(S) | {v})
            gains[v] = len(new_dom - dom)
            if _induces_connected(G, new_dom):
                connected_gains[v] = gains[v]
        pool = connected_gains or gains
        best = max(pool.values())
        S.append(tiebreak.choose(G, S, [v for v, g in pool.items() if g == best]))
        dom = closure(G, S)
    return S


def _induces_connected(G, nodes) -> bool:
    nodes = set(nodes)
    if len(nodes) <= 1:
        return True
    start = next(iter(nodes))
    seen = {start}
    stack = [start]
    while stack:
        for u in G.neighbors(stack.pop()):
            if u in nodes and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(nodes)


def cleanup(G: UndirectedGraph, S: Iterable[int], order=None) -> frozenset[int]:
    """Shrink a feasible set to an inclusionwise minimal one.

    Nodes are tried for removal in ``order`` (default: iteration order of
    S), rescanning until a full pass removes nothing.
    """
    S = list(dict.fromkeys(S))
    if not is_feasible(G, S):
        raise ValueError("cleanup requires a feasible set")
    order = list(order) if order is not None else list(S)
    kept = set(S)
    changed = True
    while changed:
        changed = False
        for v in order:
            if v in kept and is_feasible(G, kept - {v}):
                kept.discard(v)
                changed = True
    return frozenset(kept)


def partition_blocks(n: int) -> list[range]:
    """Split range(n) into ceil(log2 n) contiguous near-equal blocks."""
    b = max(1, math.ceil(math.log2(n)))
    base, extra = divmod(n, b)
    blocks = []
    start = 0
    for i in range(b):
        size = base + (1 if i < extra else 0)
        blocks.append(range(start, start + size))
        start += size
    return blocks


def partition_approx(G: UndirectedGraph, stats: dict | None = None) -> frozenset[int]:
    """Smallest feasible union of partition blocks.

    All 2^b unions of the b = ceil(log2 n) blocks are examined; the full
    union is V, so a feasible one always exists.
    """
    if G.n < 2:
        raise ValueError("partition algorithm needs n >= 2")
    blocks = partition_blocks(G.n)
    best = None
    examined = 0
    for mask in range(1 << len(blocks)):
        examined += 1
        union = frozenset(
            v for i, blk in enumerate(blocks) if mask >> i & 1 for v in blk
        )
        if best is not None and len(union) >= len(best):
            continue
        if is_feasible(G, union):
            best = union
    if stats is not None:
        stats["candidates"] = examined
        stats["blocks"] = len(blocks)
    return best
