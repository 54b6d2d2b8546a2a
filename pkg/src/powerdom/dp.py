"""Exact directed power domination via coloring DP on a tree decomposition.

Searches over valid red/blue arc colorings (see :mod:`powerdom.directed`)
and minimizes the number of origins. The DP runs bottom-up over a nice
tree decomposition of the underlying undirected graph; a state at bag X_i
records, for the processed part G_i = D[Y_i + X_i] with Y_i the forgotten
nodes:

- edge state: colors of the arcs inside the bag;
- node state per bag node: red arcs exchanged with Y_i, as the pair
  (in-count capped at 1, out-count capped at 2);
- pair state per ordered bag pair (u, v): the set of dependency-path
  types {RR, RB, BR, BB} realizable from u to v with all interior nodes
  in Y_i.

The table value is the minimum origin count among valid colorings of G_i
compatible with the state; forgotten nodes' origin status is final, bag
nodes' is provisional and re-derived after every transition. Validity
(degree rules, antiparallel exclusion, dependency cycles) is enforced at
every state creation via a walk graph over (bag node, last color)
states, so invalid partial colorings are pruned as soon as they can be
seen.
"""

from __future__ import annotations

from itertools import product

from .decomposition import FORGET, INSERT, JOIN, LEAF, NiceTreeDecomposition, validate_td
from .exact import ExactResult
from .graph import DirectedGraph, underlying_undirected
from .propagation import directed_closure

RED = "R"
BLUE = "B"

# Dependency-path type masks: bit index (first is blue)*2 + (last is blue).
_RR, _RB, _BR, _BB = 1, 2, 4, 8


def _compose_table():
    table = [[0] * 16 for _ in range(16)]
    for m1 in range(16):
        for m2 in range(16):
            out = 0
            for i in range(4):
                if not m1 >> i & 1:
                    continue
                a, b = i >> 1, i & 1
                for j in range(4):
                    if not m2 >> j & 1:
                        continue
                    c, d = j >> 1, j & 1
                    if b == 1 and c == 1:  # two consecutive blues at the joint
                        continue
                    out |= 1 << ((a << 1) | d)
            table[m1][m2] = out
    return table


_COMPOSE = _compose_table()


def _arcs_within(D, bag):
    bag = set(bag)
    return sorted((u, v) for u, v in D.arcs if u in bag and v in bag)


def _pairs(bag):
    return [(u, v) for u in bag for v in bag if u != v]


class _Level:
    """Static layout of one T-node: bag order, arc list, pair list."""

    def __init__(self, D, bag):
        self.bag = sorted(bag)
        self.arcs = _arcs_within(D, bag)
        self.pairs = _pairs(self.bag)
        self.pair_idx = {p: i for i, p in enumerate(self.pairs)}
        self.arc_idx = {a: i for i, a in enumerate(self.arcs)}


def _valid(level, colors, nodes, pairs):
    """Degree, antiparallel, and dependency-cycle checks for one state."""
    bag = level.bag
    pos = {v: i for i, v in enumerate(bag)}
    red_in = [0] * len(bag)
    red_out = [0] * len(bag)
    for (u, v), c in zip(level.arcs, colors):
        if c == RED:
            if level.arc_idx.get((v, u)) is not None and colors[level.arc_idx[(v, u)]] == RED:
                return False
            red_out[pos[u]] += 1
            red_in[pos[v]] += 1
    for i, v in enumerate(bag):
        in_y, out_y = nodes[i]
        tot_in = in_y + red_in[i]
        if tot_in > 1:
            return False
        if tot_in == 1 and out_y + red_out[i] > 1:
            return False
    # Walk graph over (bag node, last color); a cycle there is a
    # dependency cycle of the partial coloring.
    seg = {}
    for idx, (u, v) in enumerate(level.pairs):
        if pairs[idx]:
            seg[(u, v)] = seg.get((u, v), 0) | pairs[idx]
    for (u, v), c in zip(level.arcs, colors):
        if c == RED:
            seg[(u, v)] = seg.get((u, v), 0) | _RR
        else:
            seg[(v, u)] = seg.get((v, u), 0) | _BB
    adj = {}
    for (u, v), mask in seg.items():
        for i in range(4):
            if not mask >> i & 1:
                continue
            first, last = i >> 1, i & 1
            for lc in (0, 1):
                if lc == 1 and first == 1:
                    continue
                adj.setdefault((u, lc), []).append((v, last))
    color = {}
    for start in adj:
        if start in color:
            continue
        stack = [(start, iter(adj.get(start, ())))]
        color[start] = 1
        while stack:
            state, it = stack[-1]
            advanced = False
            for nxt in it:
                if color.get(nxt) == 1:
                    return False
                if nxt not in color:
                    color[nxt] = 1
                    stack.append((nxt, iter(adj.get(nxt, ()))))
                    advanced = True
                    break
            if not advanced:
                color[state] = 2
                stack.pop()
    return True


def _bag_origins(level, colors, nodes):
    red_into = set()
    for (u, v), c in zip(level.arcs, colors):
        if c == RED:
            red_into.add(v)
    return frozenset(
        v
        for i, v in enumerate(level.bag)
        if nodes[i][0] == 0 and v not in red_into
    )


def dp_solve(D: DirectedGraph, ntd: NiceTreeDecomposition, census: list | None = None) -> ExactResult:
    """Minimum directed power dominating set via the coloring DP.

    The witness is recovered by walking backpointers into a full arc
    coloring and taking its origins. ``census``, when given, receives one
    {tnode, kind, live_states, min_value} entry per T-node.
    """
    if D.n == 0:
        return ExactResult(0, frozenset(), 0)
    G = underlying_undirected(D)
    validate_td(G, ntd.as_tree_decomposition())
    levels = {i: _Level(D, ntd.bags[i]) for i in range(len(ntd.bags))}
    tables: dict[int, dict] = {}
    back: dict[int, dict] = {}
    explored = 0

    for i in ntd.postorder():
        kind = ntd.kinds[i]
        lvl = levels[i]
        table: dict = {}
        bp: dict = {}

        def put(key, value, pointer):
            nonlocal explored
            explored += 1
            if key not in table or value < table[key][0]:
                table[key] = (value,)
                bp[key] = pointer

        if kind == LEAF:
            nodes = tuple((0, 0) for _ in lvl.bag)
            pairs = tuple(0 for _ in lvl.pairs)
            for colors in product((RED, BLUE), repeat=len(lvl.arcs)):
                if _valid(lvl, colors, nodes, pairs):
                    A = len(_bag_origins(lvl, colors, nodes))
                    put((colors, nodes, pairs), A, (LEAF,))

        elif kind == INSERT:
            (c,) = ntd.children[i]
            x = ntd.delta[i]
            clvl = levels[c]
            cpos = {v: k for k, v in enumerate(clvl.bag)}
            new_arcs = [a for a in lvl.arcs if a not in clvl.arc_idx]
            xi = lvl.bag.index(x)
            for ckey, (cA,) in tables[c].items():
                ccolors, cnodes, cpairs = ckey
                forgotten = cA - len(_bag_origins(clvl, ccolors, cnodes))
                nodes = tuple(
                    (0, 0) if k == xi else cnodes[cpos[v]]
                    for k, v in enumerate(lvl.bag)
                )
                pairs = tuple(
                    cpairs[clvl.pair_idx[p]] if p in clvl.pair_idx else 0
                    for p in lvl.pairs
                )
                for new_colors in product((RED, BLUE), repeat=len(new_arcs)):
                    nc = dict(zip(new_arcs, new_colors))
                    colors = tuple(
                        nc[a] if a in nc else ccolors[clvl.arc_idx[a]]
                        for a in lvl.arcs
                    )
                    if _valid(lvl, colors, nodes, pairs):
                        A = forgotten + len(_bag_origins(lvl, colors, nodes))
                        put((colors, nodes, pairs), A, (INSERT, ckey))

        elif kind == FORGET:
            (c,) = ntd.children[i]
            x = ntd.delta[i]
            clvl = levels[c]
            cpos = {v: k for k, v in enumerate(clvl.bag)}
            dropped = [a for a in clvl.arcs if x in a]
            for ckey, (cA,) in tables[c].items():
                ccolors, cnodes, cpairs = ckey

                def ccol(a):
                    return ccolors[clvl.arc_idx[a]]

                nodes = []
                for v in lvl.bag:
                    in_y, out_y = cnodes[cpos[v]]
                    if (x, v) in clvl.arc_idx and ccol((x, v)) == RED:
                        in_y += 1
                    if (v, x) in clvl.arc_idx and ccol((v, x)) == RED:
                        out_y = min(2, out_y + 1)
                    nodes.append((min(1, in_y), out_y))
                nodes = tuple(nodes)

                def seg(u, v):
                    """u -> v dependency segments with interior in Y_c."""
                    m = cpairs[clvl.pair_idx[(u, v)]]
                    if (u, v) in clvl.arc_idx and ccol((u, v)) == RED:
                        m |= _RR
                    if (v, u) in clvl.arc_idx and ccol((v, u)) == BLUE:
                        m |= _BB
                    return m

                pairs = []
                for u, v in lvl.pairs:
                    m = cpairs[clvl.pair_idx[(u, v)]]
                    m |= _COMPOSE[seg(u, x)][seg(x, v)]
                    pairs.append(m)
                pairs = tuple(pairs)
                colors = tuple(ccol(a) for a in lvl.arcs)
                if _valid(lvl, colors, nodes, pairs):
                    drop_colors = tuple((a, ccol(a)) for a in dropped)
                    put((colors, nodes, pairs), cA, (FORGET, ckey, drop_colors))

        else:  # JOIN
            cj, ck = ntd.children[i]
            by_edge: dict = {}
            for key in tables[ck]:
                by_edge.setdefault(key[0], []).append(key)
            jlvl = levels[cj]
            for jkey, (jA,) in tables[cj].items():
                jcolors, jnodes, jpairs = jkey
                for kkey in by_edge.get(jcolors, ()):
                    kA = tables[ck][kkey][0]
                    _, knodes, kpairs = kkey
                    nodes = []
                    bad = False
                    for (ji, jo), (ki, ko) in zip(jnodes, knodes):
                        if ji + ki > 1:
                            bad = True
                            break
                        nodes.append((ji + ki, min(2, jo + ko)))
                    if bad:
                        continue
                    nodes = tuple(nodes)
                    pairs = tuple(a | b for a, b in zip(jpairs, kpairs))
                    if _valid(lvl, jcolors, nodes, pairs):
                        oj = _bag_origins(jlvl, jcolors, jnodes)
                        ok = _bag_origins(levels[ck], jcolors, knodes)
                        A = jA + kA - len(oj) - len(ok) + len(oj & ok)
                        put((jcolors, nodes, pairs), A, (JOIN, jkey, kkey))

        tables[i] = table
        back[i] = bp
        if census is not None:
            census.append(
                {
                    "tnode": i,
                    "kind": kind,
                    "live_states": len(table),
                    "min_value": min((v for (v,) in table.values()), default=None),
                }
            )

    root = ntd.root
    if not tables[root]:
        raise RuntimeError("no valid coloring found; decomposition inconsistent")
    best_key = min(tables[root], key=lambda k: tables[root][k][0])
    opt = tables[root][best_key][0]
    assignment = _reconstruct(ntd, levels, back, root, best_key)
    red_into = {v for (u, v), c in assignment.items() if c == RED}
    witness = frozenset(range(D.n)) - red_into
    if directed_closure(D, witness) != frozenset(range(D.n)):
        raise RuntimeError("reconstructed witness is infeasible; DP state corrupt")
    return ExactResult(opt, witness, explored)


def _reconstruct(ntd, levels, back, i, key):
    assignment = {}
    stack = [(i, key)]
    while stack:
        i, key = stack.pop()
        colors = key[0]
        for a, c in zip(levels[i].arcs, colors):
            assignment[a] = c
        ptr = back[i][key]
        kind = ptr[0]
        if kind == LEAF:
            continue
        if kind == INSERT:
            stack.append((ntd.children[i][0], ptr[1]))
        elif kind == FORGET:
            for a, c in ptr[2]:
                assignment[a] = c
            stack.append((ntd.children[i][0], ptr[1]))
        else:
            cj, ck = ntd.children[i]
            stack.append((cj, ptr[1]))
            stack.append((ck, ptr[2]))
    return assignment
