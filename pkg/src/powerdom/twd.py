"""Approximation over a rooted tree decomposition.

One bottom-to-top pass: whenever the bag union of a subtree is still a
strong region for the partial solution, the whole bag at its top joins
the solution. Each update also yields a fresh strong region disjoint
from the earlier ones, so the number of updates lower-bounds the optimum
and the solution is within a factor of (width + 1) of it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import TreeDecomposition, validate_td
from .errors import GraphError
from .graph import UndirectedGraph
from .regions import is_strong


@dataclass
class ApproxResult:
    """Solution with its disjoint-strong-region certificate.

    ``certificate[i]`` is (tnode, region); ``snapshots[i]`` is the partial
    solution right before that update (regions are strong against it).
    ``lower_bound`` = number of regions <= optimum; |solution| <=
    (width + 1) * lower_bound.
    """

    solution: frozenset
    certificate: list
    snapshots: list
    lower_bound: int
    width: int

    def to_dict(self) -> dict:
        return {
            "solution": sorted(self.solution),
            "lower_bound": self.lower_bound,
            "width": self.width,
            "certificate": [
                {"tnode": q, "region": sorted(region)} for q, region in self.certificate
            ],
        }


def subtree_union(td: TreeDecomposition, q: int, root=None) -> frozenset[int]:
    """Union of all bags in the subtree rooted at T-node q."""
    if not 0 <= q < len(td.bags):
        raise ValueError(f"unknown T-node {q}")
    _, _, children, _ = td.rooted(root)
    out = set()
    stack = [q]
    while stack:
        i = stack.pop()
        out |= td.bags[i]
        stack.extend(children[i])
    return frozenset(out)


def _pass(G: UndirectedGraph, td: TreeDecomposition, root=None) -> ApproxResult:
    r, _parent, children, order = td.rooted(root)
    # Subtree bag unions, accumulated bottom-up.
    Y = [set(b) for b in td.bags]
    for i in reversed(order):
        for c in children[i]:
            Y[i] |= Y[c]
    depth = [0] * len(td.bags)
    for i in order:
        for c in children[i]:
            depth[c] = depth[i] + 1
    # Deepest level first; ascending T-node id within a level.
    schedule = sorted(range(len(td.bags)), key=lambda i: (-depth[i], i))
    S: set[int] = set()
    certificate = []
    snapshots = []
    covered: set[int] = set()
    for q in schedule:
        if not td.bags[q]:
            continue
        if is_strong(G, S, Y[q]):
            snapshots.append(frozenset(S))
            certificate.append((q, frozenset(Y[q] - covered)))
            covered |= Y[q]
            S |= td.bags[q]
    return ApproxResult(
        solution=frozenset(S),
        certificate=certificate,
        snapshots=snapshots,
        lower_bound=len(certificate),
        width=td.width,
    )


def twd_approx(G: UndirectedGraph, td: TreeDecomposition, root=None) -> ApproxResult:
    """Run the pass on a validated decomposition of G."""
    validate_td(G, td)
    return _pass(G, td, root)


def tree_exact(G: UndirectedGraph) -> frozenset[int]:
    """Optimal power dominating set of a tree.

    The decomposition pass with singleton bags is exact on trees; the
    tree is rooted at node 0.
    """
    if G.n == 0:
        return frozenset()
    if G.m != G.n - 1 or not _connected(G):
        raise GraphError("input graph is not a tree")
    td = TreeDecomposition(
        bags=[{v} for v in range(G.n)],
        tree_edges=[tuple(sorted(e)) for e in G.edges],
        n=G.n,
        root=0,
    )
    return _pass(G, td).solution


def _connected(G: UndirectedGraph) -> bool:
    if G.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for u in G.neighbors(stack.pop()):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == G.n
