"""Tree decompositions: validation, rooting helpers, and the nice form."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import DecompositionError
from .graph import UndirectedGraph

LEAF = "Leaf"
INSERT = "Insert"
FORGET = "Forget"
JOIN = "Join"


class TreeDecomposition:
    """Bags indexed 0..#bags-1 plus a tree on the bag indices.

    ``n`` is the node count of the decomposed graph; ``root`` is optional
    (callers that need a rooting default to T-node 0, the smallest index).
    """

    def __init__(self, bags, tree_edges, n, root=None):
        self.bags = [frozenset(b) for b in bags]
        self.tree_edges = [tuple(sorted(e)) for e in tree_edges]
        self.n = n
        self.root = root
        k = len(self.bags)
        if len(self.tree_edges) != max(k - 1, 0):
            raise DecompositionError(
                f"tree on {k} bags needs {max(k - 1, 0)} edges, got {len(self.tree_edges)}"
            )
        adj = [[] for _ in range(k)]
        for i, j in self.tree_edges:
            if not (0 <= i < k and 0 <= j < k) or i == j:
                raise DecompositionError(f"bad tree edge ({i}, {j})")
            adj[i].append(j)
            adj[j].append(i)
        self.tree_adjacency = tuple(tuple(sorted(a)) for a in adj)
        if k > 1 and len(self._component(0)) != k:
            raise DecompositionError("decomposition tree is not connected")
        if root is not None and not 0 <= root < k:
            raise DecompositionError(f"root {root} out of range")

    def _component(self, start):
        seen = {start}
        stack = [start]
        while stack:
            for j in self.tree_adjacency[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return seen

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=1) - 1

    def rooted(self, root=None):
        """(root, parent[], children[], order) with ``order`` a top-down BFS."""
        r = root if root is not None else (self.root if self.root is not None else 0)
        parent = [None] * len(self.bags)
        children = [[] for _ in self.bags]
        order = [r]
        seen = {r}
        q = deque([r])
        while q:
            i = q.popleft()
            for j in self.tree_adjacency[i]:
                if j not in seen:
                    seen.add(j)
                    parent[j] = i
                    children[i].append(j)
                    order.append(j)
                    q.append(j)
        return r, parent, children, order

    def __eq__(self, other):
        if not isinstance(other, TreeDecomposition):
            return NotImplemented
        return (
            self.n == other.n
            and self.bags == other.bags
            and sorted(self.tree_edges) == sorted(other.tree_edges)
        )


def td_violation(G: UndirectedGraph, td: TreeDecomposition):
    """First violated decomposition condition, or None if valid.

    Returns ("T1", node_or_edge) or ("T2", (i, j, k)).
    """
    covered = set().union(*td.bags) if td.bags else set()
    for v in range(G.n):
        if v not in covered:
            return ("T1", v)
    for e in sorted(tuple(sorted(x)) for x in G.edges):
        if not any(e[0] in b and e[1] in b for b in td.bags):
            return ("T1", e)
    # (T2) <=> the bags containing each node induce a connected subtree.
    for v in range(G.n):
        holders = [i for i, b in enumerate(td.bags) if v in b]
        if len(holders) <= 1:
            continue
        comp = _tree_component(td, holders[0], set(holders))
        outside = [i for i in holders if i not in comp]
        if outside:
            i, k = holders[0], outside[0]
            j = next(t for t in _tree_path(td, i, k) if v not in td.bags[t])
            return ("T2", (i, j, k))
    return None


def validate_td(G: UndirectedGraph, td: TreeDecomposition) -> int:
    """Return the width if (T1)/(T2) hold, else raise with a witness."""
    bad = td_violation(G, td)
    if bad is not None:
        cond, witness = bad
        raise DecompositionError(
            f"{cond} violated, witness {witness}", condition=cond, witness=witness
        )
    return td.width


def _tree_component(td, start, allowed):
    seen = {start}
    stack = [start]
    while stack:
        for j in td.tree_adjacency[stack.pop()]:
            if j in allowed and j not in seen:
                seen.add(j)
                stack.append(j)
    return seen


def _tree_path(td, i, k):
    parent = {i: None}
    q = deque([i])
    while q:
        x = q.popleft()
        if x == k:
            break
        for j in td.tree_adjacency[x]:
            if j not in parent:
                parent[j] = x
                q.append(j)
    path = [k]
    while path[-1] != i:
        path.append(parent[path[-1]])
    return reversed(path)


@dataclass
class NiceTreeDecomposition:
    """Rooted decomposition with Leaf/Insert/Forget/Join node kinds.

    Per-node parallel lists; ``delta[i]`` is the inserted (Insert) or
    forgotten (Forget) graph node, else None.
    """

    bags: list = field(default_factory=list)
    kinds: list = field(default_factory=list)
    children: list = field(default_factory=list)
    delta: list = field(default_factory=list)
    root: int = 0
    n: int = 0

    def add(self, kind, bag, children=(), delta=None) -> int:
        self.bags.append(frozenset(bag))
        self.kinds.append(kind)
        self.children.append(list(children))
        self.delta.append(delta)
        return len(self.bags) - 1

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=1) - 1

    def postorder(self):
        out = []
        stack = [(self.root, False)]
        while stack:
            i, done = stack.pop()
            if done:
                out.append(i)
            else:
                stack.append((i, True))
                for c in self.children[i]:
                    stack.append((c, False))
        return out

    def as_tree_decomposition(self) -> TreeDecomposition:
        edges = [(i, c) for i in range(len(self.bags)) for c in self.children[i]]
        return TreeDecomposition(self.bags, edges, self.n, root=self.root)

    def check(self):
        """Structural sanity: child counts, bag deltas, join equality."""
        for i, kind in enumerate(self.kinds):
            ch = self.children[i]
            if kind == LEAF and ch:
                raise DecompositionError("leaf with children")
            if kind in (INSERT, FORGET) and len(ch) != 1:
                raise DecompositionError(f"{kind} node must have one child")
            if kind == JOIN:
                if len(ch) != 2:
                    raise DecompositionError("join node must have two children")
                if not (self.bags[i] == self.bags[ch[0]] == self.bags[ch[1]]):
                    raise DecompositionError("join children bags differ")
            if kind == INSERT:
                (c,) = ch
                if self.bags[i] != self.bags[c] | {self.delta[i]}:
                    raise DecompositionError("insert bag mismatch")
            if kind == FORGET:
                (c,) = ch
                if self.bags[i] != self.bags[c] - {self.delta[i]}:
                    raise DecompositionError("forget bag mismatch")


def to_nice(td: TreeDecomposition, root=None) -> NiceTreeDecomposition:
    """Rewrite a tree decomposition into nice form.

    Width is preserved, every original bag appears as some bag, and the
    node count stays linear in the input size.
    """
    nice = NiceTreeDecomposition(n=td.n)
    if not td.bags:
        nice.root = nice.add(LEAF, frozenset())
        return nice
    r, _parent, children, order = td.rooted(root)

    def chain(top_bag, sub_root, sub_bag):
        """Connect an already-built subtree (top bag ``sub_bag``) up to
        ``top_bag`` through single Forget then Insert steps."""
        cur, cur_bag = sub_root, frozenset(sub_bag)
        for v in sorted(cur_bag - top_bag):
            cur_bag = cur_bag - {v}
            cur = nice.add(FORGET, cur_bag, [cur], v)
        for v in sorted(top_bag - cur_bag):
            cur_bag = cur_bag | {v}
            cur = nice.add(INSERT, cur_bag, [cur], v)
        return cur

    built = {}
    for i in reversed(order):
        bag = td.bags[i]
        kids = children[i]
        if not kids:
            built[i] = nice.add(LEAF, bag)
            continue
        tops = [chain(bag, built[c], td.bags[c]) for c in kids]
        while len(tops) > 1:
            a = tops.pop()
            b = tops.pop()
            tops.append(nice.add(JOIN, bag, [a, b]))
        built[i] = tops[0]
    nice.root = built[r]
    nice.check()
    return nice


def td_from_elimination_order(G: UndirectedGraph, order) -> TreeDecomposition:
    """Tree decomposition induced by a vertex elimination order.

    Mechanical fill-in construction: eliminating v yields the bag
    {v} + current neighbors and an edge to the bag of the next eliminated
    neighbor. The order is caller-supplied; no width optimization happens
    here.
    """
    if sorted(order) != list(range(G.n)):
        raise DecompositionError("order must be a permutation of the nodes")
    pos = {v: i for i, v in enumerate(order)}
    adj = {v: set(G.neighbors(v)) for v in range(G.n)}
    bags = []
    bag_of = {}
    links = []
    for v in order:
        nbrs = adj[v]
        bags.append(frozenset({v} | nbrs))
        bag_of[v] = len(bags) - 1
        for a in nbrs:
            adj[a].discard(v)
            for b in nbrs:
                if a != b:
                    adj[a].add(b)
        if nbrs:
            links.append((v, min(nbrs, key=lambda u: pos[u])))
    edges = [(bag_of[v], bag_of[u]) for v, u in links]
    # Stitch disconnected pieces (isolated vertices, multiple components).
    if bags:
        seen = {0}
        comp_reps = [0]
        adj_t = [[] for _ in bags]
        for i, j in edges:
            adj_t[i].append(j)
            adj_t[j].append(i)
        for s in range(len(bags)):
            if s in seen:
                continue
            stack = [s]
            fresh = {s}
            while stack:
                for j in adj_t[stack.pop()]:
                    if j not in fresh:
                        fresh.add(j)
                        stack.append(j)
            if fresh & seen:
                seen |= fresh
            else:
                comp_reps.append(s)
                seen |= fresh
        for rep in comp_reps[1:]:
            edges.append((comp_reps[0], rep))
    return TreeDecomposition(bags, edges, G.n)


def min_degree_order(G: UndirectedGraph):
    """Min-degree elimination heuristic; exact for width <= 2 graphs."""
    adj = {v: set(G.neighbors(v)) for v in range(G.n)}
    alive = set(range(G.n))
    order = []
    while alive:
        v = min(alive, key=lambda x: (len(adj[x]), x))
        order.append(v)
        nbrs = adj[v]
        for a in nbrs:
            adj[a].discard(v)
            for b in nbrs:
                if a != b:
                    adj[a].add(b)
        alive.discard(v)
        del adj[v]
    return order
