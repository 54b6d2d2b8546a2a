"""Instance file formats (all text, UTF-8, LF, 1-based node ids).

Graph file::

    c optional comments
    p pds <n> <m>          (undirected; "p dpds <n> <m>" for directed)
    e <u> <v>              (m edge lines; "a <u> <v>" for arcs)

Tree decomposition file (PACE-style)::

    s td <#bags> <maxbagsize> <n>
    b <bagid> <v1> <v2> ...
    <i> <j>                (tree edges between bag ids)

Node-set file: whitespace-separated 1-based node ids, "c" comment lines.

Writers emit a canonical form (sorted edges/bags) so save -> load -> save
round-trips are byte-exact.
"""

from __future__ import annotations

import io as _stdio

from .decomposition import TreeDecomposition
from .errors import GraphError, ParseError
from .graph import DirectedGraph, UndirectedGraph


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line


def _int(tok, lineno):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"expected integer, got {tok!r}") from None


def loads_graph(text: str, kind: str | None = None):
    """Parse a graph file. ``kind`` (``"undirected"``/``"directed"``) is
    checked against the header when given."""
    header = None
    pairs = []
    for lineno, line in _lines(text):
        tok = line.split()
        if tok[0] == "p":
            if header is not None:
                raise ParseError(lineno, "duplicate problem line")
            if len(tok) != 4 or tok[1] not in ("pds", "dpds"):
                raise ParseError(lineno, "expected 'p pds <n> <m>' or 'p dpds <n> <m>'")
            header = (tok[1], _int(tok[2], lineno), _int(tok[3], lineno))
        elif tok[0] in ("e", "a"):
            if header is None:
                raise ParseError(lineno, "edge before problem line")
            want = "e" if header[0] == "pds" else "a"
            if tok[0] != want:
                raise ParseError(lineno, f"expected '{want}' lines for {header[0]}")
            if len(tok) != 3:
                raise ParseError(lineno, "expected two endpoints")
            u, v = _int(tok[1], lineno), _int(tok[2], lineno)
            n = header[1]
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(lineno, f"node id out of range 1..{n}")
            pairs.append((lineno, u - 1, v - 1))
        else:
            raise ParseError(lineno, f"unknown line type {tok[0]!r}")
    if header is None:
        raise ParseError(1, "missing problem line")
    fmt, n, m = header
    if len(pairs) != m:
        raise ParseError(1, f"header promises {m} edges, file has {len(pairs)}")
    directed = fmt == "dpds"
    if kind is not None and kind != ("directed" if directed else "undirected"):
        raise ParseError(1, f"expected a {kind} graph, file is '{fmt}'")
    try:
        if directed:
            return DirectedGraph(n, [(u, v) for _, u, v in pairs])
        return UndirectedGraph(n, [(u, v) for _, u, v in pairs])
    except GraphError as exc:
        # Re-report against the first offending line.
        for lineno, u, v in pairs:
            try:
                if directed:
                    DirectedGraph(n, [(a, b) for ln, a, b in pairs if ln <= lineno])
                else:
                    UndirectedGraph(n, [(a, b) for ln, a, b in pairs if ln <= lineno])
            except GraphError:
                raise ParseError(lineno, str(exc)) from None
        raise


def load_graph(path, kind: str | None = None):
    with open(path, encoding="utf-8") as fh:
        return loads_graph(fh.read(), kind)


def dumps_graph(G) -> str:
    out = _stdio.StringIO()
    if isinstance(G, DirectedGraph):
        out.write(f"p dpds {G.n} {G.m}\n")
        for u, v in sorted(G.arcs):
            out.write(f"a {u + 1} {v + 1}\n")
    else:
        out.write(f"p pds {G.n} {G.m}\n")
        for u, v in sorted(tuple(sorted(e)) for e in G.edges):
            out.write(f"e {u + 1} {v + 1}\n")
    return out.getvalue()


def save_graph(G, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_graph(G))


def loads_td(text: str) -> TreeDecomposition:
    header = None
    bags = {}
    tree_edges = []
    for lineno, line in _lines(text):
        tok = line.split()
        if tok[0] == "s":
            if header is not None:
                raise ParseError(lineno, "duplicate solution line")
            if len(tok) != 5 or tok[1] != "td":
                raise ParseError(lineno, "expected 's td <#bags> <maxbagsize> <n>'")
            header = tuple(_int(t, lineno) for t in tok[2:])
        elif tok[0] == "b":
            if header is None:
                raise ParseError(lineno, "bag before solution line")
            bag_id = _int(tok[1], lineno)
            if bag_id in bags:
                raise ParseError(lineno, f"duplicate bag id {bag_id}")
            members = [_int(t, lineno) for t in tok[2:]]
            if any(not 1 <= v <= header[2] for v in members):
                raise ParseError(lineno, f"bag node id out of range 1..{header[2]}")
            bags[bag_id] = frozenset(v - 1 for v in members)
        else:
            if header is None:
                raise ParseError(lineno, "tree edge before solution line")
            if len(tok) != 2:
                raise ParseError(lineno, "expected tree edge '<i> <j>'")
            tree_edges.append((_int(tok[0], lineno), _int(tok[1], lineno)))
    if header is None:
        raise ParseError(1, "missing solution line")
    nbags, maxbag, n = header
    if len(bags) != nbags or sorted(bags) != list(range(1, nbags + 1)):
        raise ParseError(1, f"expected bag ids 1..{nbags}")
    if any(len(b) > maxbag for b in bags.values()):
        raise ParseError(1, f"bag larger than declared max size {maxbag}")
    edges0 = [(i - 1, j - 1) for i, j in tree_edges]
    return TreeDecomposition(
        bags=[bags[i] for i in range(1, nbags + 1)], tree_edges=edges0, n=n
    )


def load_td(path) -> TreeDecomposition:
    with open(path, encoding="utf-8") as fh:
        return loads_td(fh.read())


def dumps_td(td: TreeDecomposition) -> str:
    out = _stdio.StringIO()
    maxbag = max((len(b) for b in td.bags), default=0)
    out.write(f"s td {len(td.bags)} {maxbag} {td.n}\n")
    for i, bag in enumerate(td.bags):
        members = " ".join(str(v + 1) for v in sorted(bag))
        out.write(f"b {i + 1} {members}\n".replace(" \n", "\n"))
    for i, j in sorted(tuple(sorted(e)) for e in td.tree_edges):
        out.write(f"{i + 1} {j + 1}\n")
    return out.getvalue()


def save_td(td: TreeDecomposition, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_td(td))


def loads_node_set(text: str) -> frozenset[int]:
    nodes = []
    for lineno, line in _lines(text):
        for tok in line.split():
            v = _int(tok, lineno)
            if v < 1:
                raise ParseError(lineno, f"node id {v} must be >= 1")
            nodes.append(v - 1)
    return frozenset(nodes)


def load_node_set(path) -> frozenset[int]:
    with open(path, encoding="utf-8") as fh:
        return loads_node_set(fh.read())


def dumps_node_set(S) -> str:
    return "".join(f"{v + 1}\n" for v in sorted(S))


def save_node_set(S, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_node_set(S))


def loads_minrep(text: str):
    """Parse a bipartite cover instance.

    Format: "p minrep <n_a> <n_b> <q_a> <q_b> <m>" then m lines
    "e <a> <b>" with 1-based ids local to each side. Part sizes are
    n_a/q_a and n_b/q_b; ids are assigned to parts in contiguous blocks.
    """
    from .generators import MinRepInstance

    header = None
    edges = []
    for lineno, line in _lines(text):
        tok = line.split()
        if tok[0] == "p":
            if header is not None:
                raise ParseError(lineno, "duplicate problem line")
            if len(tok) != 7 or tok[1] != "minrep":
                raise ParseError(lineno, "expected 'p minrep <n_a> <n_b> <q_a> <q_b> <m>'")
            header = tuple(_int(t, lineno) for t in tok[2:])
            n_a, n_b, q_a, q_b, _ = header
            if q_a < 1 or q_b < 1 or n_a % q_a or n_b % q_b:
                raise ParseError(lineno, "side sizes must divide evenly into parts")
        elif tok[0] == "e":
            if header is None:
                raise ParseError(lineno, "edge before problem line")
            if len(tok) != 3:
                raise ParseError(lineno, "expected 'e <a> <b>'")
            a, bb = _int(tok[1], lineno), _int(tok[2], lineno)
            if not (1 <= a <= header[0] and 1 <= bb <= header[1]):
                raise ParseError(lineno, "node id out of range")
            edges.append((a - 1, bb - 1))
        else:
            raise ParseError(lineno, f"unknown line type {tok[0]!r}")
    if header is None:
        raise ParseError(1, "missing problem line")
    n_a, n_b, q_a, q_b, m = header
    if len(edges) != m:
        raise ParseError(1, f"header promises {m} edges, file has {len(edges)}")
    sa, sb = n_a // q_a, n_b // q_b
    return MinRepInstance(
        a_parts=tuple(tuple(range(i * sa, (i + 1) * sa)) for i in range(q_a)),
        b_parts=tuple(tuple(range(j * sb, (j + 1) * sb)) for j in range(q_b)),
        edges=frozenset(edges),
    )


def load_minrep(path):
    with open(path, encoding="utf-8") as fh:
        return loads_minrep(fh.read())


def dumps_minrep(M) -> str:
    out = _stdio.StringIO()
    out.write(
        f"p minrep {M.n_a} {M.n_b} {len(M.a_parts)} {len(M.b_parts)} {len(M.edges)}\n"
    )
    for a, bb in sorted(M.edges):
        out.write(f"e {a + 1} {bb + 1}\n")
    return out.getvalue()


def save_minrep(M, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_minrep(M))
