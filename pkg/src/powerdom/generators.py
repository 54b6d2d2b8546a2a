"""Instance families: grids, triangle chains, subdivided-grid adversaries,
bipartite cover instances, and both cover-testing reductions.

Node numbering conventions are documented per generator; reductions put
the hub node w* at id 0 so oracle witnesses are easy to audit.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .decomposition import TreeDecomposition
from .errors import BudgetExceededError
from .graph import DirectedGraph, UndirectedGraph


def _rng(seed) -> random.Random:
    """Seeds may be ints or tuples; stringify for the stdlib generator."""
    return random.Random(repr(seed))


def gen_grid(rows: int, cols: int) -> tuple[UndirectedGraph, TreeDecomposition]:
    """rows x cols grid with a column-sweep path decomposition.

    Node (r, c) is r*cols + c. The decomposition has width min(rows, cols)
    and sweeps along the longer dimension.
    """
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")
    n = rows * cols

    def node(r, c):
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((node(r, c), node(r, c + 1)))
            if r + 1 < rows:
                edges.append((node(r, c), node(r + 1, c)))
    G = UndirectedGraph(n, edges)
    if rows <= cols:
        col = lambda j: [node(r, j) for r in range(rows)]  # noqa: E731
        span, width = cols, rows
    else:
        col = lambda j: [node(j, c) for c in range(cols)]  # noqa: E731
        span, width = rows, cols
    bags = [frozenset(col(0))]
    for j in range(span - 1):
        left, right = col(j), col(j + 1)
        for i in range(width):
            bags.append(frozenset(left[i:] + right[: i + 1]))
    tree_edges = [(i, i + 1) for i in range(len(bags) - 1)]
    return G, TreeDecomposition(bags, tree_edges, n, root=0)


def gen_triangle_chain(t: int) -> UndirectedGraph:
    """t triangles threaded by three disjoint paths.

    Triangle i occupies nodes 3i, 3i+1, 3i+2; path p links node 3i+p to
    node 3(i+1)+p. Any node of the first triangle power dominates
    everything; the max degree is 4 so plain domination needs Theta(t).
    """
    if t < 1:
        raise ValueError("need at least one triangle")
    edges = []
    for i in range(t):
        a, b, c = 3 * i, 3 * i + 1, 3 * i + 2
        edges += [(a, b), (a, c), (b, c)]
        if i + 1 < t:
            edges += [(a, a + 3), (b, b + 3), (c, c + 3)]
    return UndirectedGraph(3 * t, edges)


def gen_augmented(G: UndirectedGraph) -> UndirectedGraph:
    """Attach a pendant node v' to every node v.

    Power domination on the result equals plain domination on G: the
    pendants make Rule 2 useless on original nodes.
    """
    edges = [tuple(sorted(e)) for e in G.edges]
    edges += [(v, G.n + v) for v in range(G.n)]
    return UndirectedGraph(2 * G.n, edges)


class _Builder:
    """Grows a graph one node at a time; used by the subdivision helpers."""

    def __init__(self, n):
        self.n = n
        self.edges = []

    def new_node(self):
        self.n += 1
        return self.n - 1

    def edge(self, u, v):
        self.edges.append((u, v))

    def chain(self, u, v, k):
        """Connect u and v through k fresh subdivision nodes."""
        prev = u
        for _ in range(k):
            s = self.new_node()
            self.edge(prev, s)
            prev = s
        self.edge(prev, v)

    def graph(self):
        return UndirectedGraph(self.n, self.edges)


def _corner_plain_edges(rows, cols):
    """Row-edges left unsubdivided: the two outermost in each corner.

    Without this the boundary rows carry a propagation wave that lets a
    second-row node dominate more than the intended 7-node maximum.
    """
    return {
        (r, c)
        for r in (0, rows - 1)
        for c in (0, 1, cols - 3, cols - 2)
        if 0 <= c < cols - 1
    }


def gen_greedy_bad(l: int, m: int) -> UndirectedGraph:
    """9l x 9m grid with every row-edge subdivided once, except the
    corner exceptions of _corner_plain_edges.

    Any single node power dominates at most 7 nodes and the 9x9 block
    centers (see block_centers) attain it, so a coverage-greedy run
    whose ties are resolved toward the centers keeps making gain-7
    picks while a single column dominates everything. Grid nodes keep
    their gen_grid ids; subdivision nodes follow.
    """
    if l < 1 or m < 1:
        raise ValueError("dimensions must be positive")
    rows, cols = 9 * l, 9 * m
    b = _Builder(rows * cols)

    def node(r, c):
        return r * cols + c

    plain = _corner_plain_edges(rows, cols)
    for r in range(rows):
        for c in range(cols - 1):
            if (r, c) in plain:
                b.edge(node(r, c), node(r, c + 1))
            else:
                b.chain(node(r, c), node(r, c + 1), 1)
    for r in range(rows - 1):
        for c in range(cols):
            b.edge(node(r, c), node(r + 1, c))
    return b.graph()


def block_centers(l: int, m: int) -> list[int]:
    """Center node of each 9x9 block of gen_greedy_bad(l, m).

    These are the adversary's preferred picks: each dominates exactly 7
    nodes and no two interact, so coverage-greedy accepts all l*m of
    them before anything else pays off.
    """
    cols = 9 * m
    return [(9 * i + 4) * cols + 9 * j + 4 for i in range(l) for j in range(m)]


def gen_proximity_bad(h: int, m: int, l: int) -> UndirectedGraph:
    """h x (2m+1) grid tuned against connectivity-greedy.

    Middle-row edges get l subdivision nodes each, all other row-edges
    one (minus the four corner exceptions); each middle-row node at an
    odd column (a "white" node) also gets shortcut edges two rows up and
    down. A white node then dominates exactly 2l+7 nodes, the adjacent
    white 2l+6 new ones, while the first column dominates everything.
    """
    if h < 9 or h % 2 == 0:
        raise ValueError("h must be odd and at least 9")
    if m < 1 or l < 1:
        raise ValueError("m and l must be positive")
    rows, cols = h, 2 * m + 1
    mid = rows // 2
    b = _Builder(rows * cols)

    def node(r, c):
        return r * cols + c

    plain = _corner_plain_edges(rows, cols)
    for r in range(rows):
        for c in range(cols - 1):
            if r == mid:
                b.chain(node(r, c), node(r, c + 1), l)
            elif (r, c) in plain:
                b.edge(node(r, c), node(r, c + 1))
            else:
                b.chain(node(r, c), node(r, c + 1), 1)
    for r in range(rows - 1):
        for c in range(cols):
            b.edge(node(r, c), node(r + 1, c))
    for c in range(1, cols - 1, 2):
        b.edge(node(mid, c), node(mid - 2, c))
        b.edge(node(mid, c), node(mid + 2, c))
    return b.graph()


def white_nodes(h: int, m: int) -> list[int]:
    """Ids of the white (odd-column middle-row) nodes of gen_proximity_bad."""
    cols = h // 2 * (2 * m + 1)  # middle row offset
    return [cols + c for c in range(1, 2 * m, 2)]


@dataclass(frozen=True)
class MinRepInstance:
    """Bipartite cover instance: pick fewest nodes inducing an edge
    between every pair of parts that has one.

    ``a_parts``/``b_parts`` partition range(n_a)/range(n_b) into
    equal-sized tuples; edges are (a, b) index pairs.
    """

    a_parts: tuple
    b_parts: tuple
    edges: frozenset

    def __post_init__(self):
        for parts in (self.a_parts, self.b_parts):
            if len({len(p) for p in parts}) > 1:
                raise ValueError("parts must be equal-sized")

    @property
    def n_a(self) -> int:
        return sum(len(p) for p in self.a_parts)

    @property
    def n_b(self) -> int:
        return sum(len(p) for p in self.b_parts)

    def part_of_a(self, a: int) -> int:
        return next(i for i, p in enumerate(self.a_parts) if a in p)

    def part_of_b(self, b: int) -> int:
        return next(i for i, p in enumerate(self.b_parts) if b in p)

    @property
    def super_edges(self) -> list[tuple[int, int]]:
        seen = sorted({(self.part_of_a(a), self.part_of_b(b)) for a, b in self.edges})
        return seen

    def edges_of_super(self, i: int, j: int) -> list[tuple[int, int]]:
        return sorted(
            (a, b)
            for a, b in self.edges
            if self.part_of_a(a) == i and self.part_of_b(b) == j
        )

    def covers(self, chosen_a, chosen_b) -> bool:
        chosen_a, chosen_b = set(chosen_a), set(chosen_b)
        for i, j in self.super_edges:
            if not any(
                a in chosen_a and b in chosen_b for a, b in self.edges_of_super(i, j)
            ):
                return False
        return True


def minrep_opt(M: MinRepInstance, budget: int = 10**7) -> tuple[int, frozenset]:
    """Exhaustive optimum: (size, witness as ('a'/'b', id) pairs)."""
    universe = [("a", a) for a in range(M.n_a)] + [("b", b) for b in range(M.n_b)]
    if len(universe) > 16:
        raise ValueError("exhaustive cover solver limited to 16 candidate nodes")
    explored = 0
    for size in range(len(universe) + 1):
        for chosen in combinations(universe, size):
            explored += 1
            if explored > budget:
                raise BudgetExceededError(explored - 1, size - 1)
            ca = [x for kind, x in chosen if kind == "a"]
            cb = [x for kind, x in chosen if kind == "b"]
            if M.covers(ca, cb):
                return size, frozenset(chosen)
    raise AssertionError("full node set always covers")


def gen_minrep_random(q_a, q_b, part_size, edge_prob, seed) -> MinRepInstance:
    """Random instance with at least one edge; deterministic in the seed."""
    if min(q_a, q_b, part_size) < 1 or not 0 <= edge_prob <= 1:
        raise ValueError("bad parameters")
    attempt = 0
    while True:
        rng = _rng((seed, attempt))
        edges = set()
        for a in range(q_a * part_size):
            for b in range(q_b * part_size):
                if rng.random() < edge_prob:
                    edges.add((a, b))
        if edges:
            break
        attempt += 1
    a_parts = tuple(
        tuple(range(i * part_size, (i + 1) * part_size)) for i in range(q_a)
    )
    b_parts = tuple(
        tuple(range(j * part_size, (j + 1) * part_size)) for j in range(q_b)
    )
    return MinRepInstance(a_parts=a_parts, b_parts=b_parts, edges=frozenset(edges))


def reduce_minrep_to_pds(M: MinRepInstance, lam: int = 4) -> UndirectedGraph:
    """Undirected cover-testing reduction.

    Node 0 is the hub w*, nodes 1..3 its pendant leaves, then the A side,
    the B side, and lam cycle copies of 3 nodes per edge for every super
    edge. Power domination optimum = cover optimum + 1.
    """
    if lam < 4:
        raise ValueError("lam must be at least 4")
    w, leaves = 0, (1, 2, 3)
    a_off = 4
    b_off = 4 + M.n_a
    b = _Builder(4 + M.n_a + M.n_b)
    for x in leaves:
        b.edge(w, x)
    for a in range(M.n_a):
        b.edge(w, a_off + a)
    for bb in range(M.n_b):
        b.edge(w, b_off + bb)
    for i, j in M.super_edges:
        slot = M.edges_of_super(i, j)
        for _copy in range(lam):
            cyc = [b.new_node() for _ in range(3 * len(slot))]
            for t in range(len(cyc)):
                b.edge(cyc[t], cyc[(t + 1) % len(cyc)])
            for k, (a, bb) in enumerate(slot):
                b.edge(a_off + a, cyc[3 * k])  # u_k
                b.edge(b_off + bb, cyc[3 * k + 1])  # v_k
    return b.graph()


def reduce_minrep_to_directed_pds(M: MinRepInstance, lam: int = 4) -> DirectedGraph:
    """Directed (DAG) cover-testing reduction.

    Node 0 is w* (the only in-degree-0 node), then the A and B sides,
    then per super edge lam copies of a center plus 6 nodes per edge:
    u, v get arcs from the edge endpoints; d feeds u, v and the center;
    alpha feeds u, beta and the center; gamma feeds beta and the center;
    w* feeds d, alpha, gamma. A covering pair unlocks the center through
    d, after which gamma, alpha, d drain the rest; without one, every
    dominated gadget node keeps at least two undominated out-neighbors.
    """
    if lam < 4:
        raise ValueError("lam must be at least 4")
    w = 0
    a_off = 1
    b_off = 1 + M.n_a
    n = 1 + M.n_a + M.n_b
    arcs = []
    for a in range(M.n_a):
        arcs.append((w, a_off + a))
    for bb in range(M.n_b):
        arcs.append((w, b_off + bb))

    def new_node():
        nonlocal n
        n += 1
        return n - 1

    for i, j in M.super_edges:
        slot = M.edges_of_super(i, j)
        for _copy in range(lam):
            center = new_node()
            for a, bb in slot:
                u, v, d = new_node(), new_node(), new_node()
                alpha, beta, gamma = new_node(), new_node(), new_node()
                arcs += [(a_off + a, u), (b_off + bb, v)]
                arcs += [(d, u), (d, v), (d, center)]
                arcs += [(alpha, u), (alpha, beta), (alpha, center)]
                arcs += [(gamma, beta), (gamma, center)]
                arcs += [(w, d), (w, alpha), (w, gamma)]
    return DirectedGraph(n, arcs)


def gen_partial_ktree(n, k, seed, edge_keep=1.0) -> tuple[UndirectedGraph, TreeDecomposition]:
    """Random partial k-tree with its witnessing tree decomposition.

    Builds a k-tree (each new node joins a random k-clique inside an
    existing bag), then keeps each edge with probability ``edge_keep``.
    The decomposition stays valid for the kept subgraph.
    """
    if n < 1 or k < 0:
        raise ValueError("bad parameters")
    rng = _rng(seed)
    base = min(k + 1, n)
    bags = [frozenset(range(base))]
    tree_edges = []
    edges = {(u, v) for u, v in combinations(range(base), 2)}
    for v in range(base, n):
        parent = rng.randrange(len(bags))
        clique = tuple(sorted(rng.sample(sorted(bags[parent]), min(k, len(bags[parent])))))
        bags.append(frozenset(clique) | {v})
        tree_edges.append((parent, len(bags) - 1))
        edges |= {(min(u, v), max(u, v)) for u in clique}
    if edge_keep < 1.0:
        edges = {e for e in sorted(edges) if rng.random() < edge_keep}
    G = UndirectedGraph(n, edges)
    return G, TreeDecomposition(bags, tree_edges, n, root=0)


def gen_random_graph(n, p, seed) -> UndirectedGraph:
    """Erdos-Renyi style graph, deterministic in the seed."""
    rng = _rng(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return UndirectedGraph(n, edges)


def gen_random_tree(n, seed) -> UndirectedGraph:
    """Uniform-ish random tree: each node attaches to a random earlier one."""
    rng = _rng(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return UndirectedGraph(n, edges)


def gen_random_digraph(n, p, seed) -> DirectedGraph:
    rng = _rng(seed)
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < p
    ]
    return DirectedGraph(n, arcs)


def gen_partial_2tree_digraph(n, seed, edge_keep=0.8) -> tuple[DirectedGraph, TreeDecomposition]:
    """Random digraph whose underlying graph is a partial 2-tree.

    Each kept underlying edge is oriented randomly, or made antiparallel
    with small probability. Returns the digraph with the decomposition of
    its underlying graph.
    """
    rng = _rng(seed)
    G, td = gen_partial_ktree(n, 2, (seed, "base"), edge_keep)
    arcs = []
    for u, v in sorted(tuple(sorted(e)) for e in G.edges):
        r = rng.random()
        if r < 0.4:
            arcs.append((u, v))
        elif r < 0.8:
            arcs.append((v, u))
        else:
            arcs += [(u, v), (v, u)]
    return DirectedGraph(G.n, arcs), td


def log2_ceil(n: int) -> int:
    return max(1, math.ceil(math.log2(n)))
