"""Graph data model: simple undirected graphs and directed graphs.

Node ids are dense 0-based integers internally; the file formats are
1-based (see :mod:`powerdom.io`). Both graph classes are immutable after
construction and safe to share between workers.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import GraphError


def _check_node(v, n):
    if not 0 <= v < n:
        raise GraphError(f"node id {v} out of range [0, {n})")


class UndirectedGraph:
    """Simple undirected graph: no self-loops, no parallel edges.

    Neighbor lists are sorted ascending so every "pick any"/"first" step
    downstream is deterministic.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError("node count must be non-negative")
        self.n = n
        seen = set()
        adj = [[] for _ in range(n)]
        for u, v in edges:
            _check_node(u, n)
            _check_node(v, n)
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.edges = frozenset(seen)
        self.adjacency = tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        _check_node(v, self.n)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in CSR form (indptr, indices) for the closure kernel."""
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        for v in range(self.n):
            indptr[v + 1] = indptr[v] + len(self.adjacency[v])
        indices = np.fromiter(
            (u for v in range(self.n) for u in self.adjacency[v]),
            dtype=np.int32,
            count=int(indptr[-1]),
        )
        return indptr, indices

    def __eq__(self, other):
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"UndirectedGraph(n={self.n}, m={self.m})"


class DirectedGraph:
    """Directed graph: no self-loops, no duplicate arcs.

    Antiparallel arc pairs (u, v) and (v, u) are allowed.
    """

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError("node count must be non-negative")
        self.n = n
        seen = set()
        out = [[] for _ in range(n)]
        inn = [[] for _ in range(n)]
        for u, v in arcs:
            _check_node(u, n)
            _check_node(v, n)
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            if (u, v) in seen:
                raise GraphError(f"duplicate arc ({u}, {v})")
            seen.add((u, v))
            out[u].append(v)
            inn[v].append(u)
        self.arcs = frozenset(seen)
        self.out_adjacency = tuple(tuple(sorted(a)) for a in out)
        self.in_adjacency = tuple(tuple(sorted(a)) for a in inn)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        _check_node(v, self.n)
        return self.out_adjacency[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        _check_node(v, self.n)
        return self.in_adjacency[v]

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors(v))

    def in_degree(self, v: int) -> int:
        return len(self.in_neighbors(v))

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    @cached_property
    def csr(self):
        """(out_indptr, out_indices, in_indptr, in_indices) as int32 arrays."""
        return _adj_to_csr(self.out_adjacency) + _adj_to_csr(self.in_adjacency)

    def __eq__(self, other):
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"DirectedGraph(n={self.n}, m={self.m})"


def _adj_to_csr(adjacency):
    n = len(adjacency)
    indptr = np.zeros(n + 1, dtype=np.int32)
    for v in range(n):
        indptr[v + 1] = indptr[v] + len(adjacency[v])
    indices = np.fromiter(
        (u for v in range(n) for u in adjacency[v]),
        dtype=np.int32,
        count=int(indptr[-1]),
    )
    return indptr, indices


def neighborhood(G: UndirectedGraph, R: Iterable[int]) -> frozenset[int]:
    """Nodes outside R with a neighbor in R: nbr(R)."""
    R = frozenset(R)
    for v in R:
        _check_node(v, G.n)
    return frozenset(u for v in R for u in G.neighbors(v)) - R


def exterior(G: UndirectedGraph, R: Iterable[int]) -> frozenset[int]:
    """Nodes of R adjacent to some node outside R: ext(R) = nbr(V - R)."""
    R = frozenset(R)
    for v in R:
        _check_node(v, G.n)
    return frozenset(v for v in R if any(u not in R for u in G.neighbors(v)))


def underlying_undirected(D: DirectedGraph) -> UndirectedGraph:
    """Drop arc directions and merge the resulting parallel edges."""
    edges = {(u, v) if u < v else (v, u) for u, v in D.arcs}
    return UndirectedGraph(D.n, edges)
