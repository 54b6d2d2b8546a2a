"""Coloring DP vs the brute-force directed oracle."""

from powerdom.decomposition import min_degree_order, td_from_elimination_order, to_nice
from powerdom.dp import dp_solve
from powerdom.exact import exact_directed_pds
from powerdom.generators import gen_partial_2tree_digraph
from powerdom.graph import DirectedGraph, underlying_undirected
from powerdom.propagation import directed_closure


def _nice_td_of(D):
    G = underlying_undirected(D)
    return to_nice(td_from_elimination_order(G, min_degree_order(G)))


def test_empty_graph():
    res = dp_solve(DirectedGraph(0, []), None)
    assert res.opt_size == 0 and res.witness == frozenset()


def test_single_arc():
    D = DirectedGraph(2, [(0, 1)])
    res = dp_solve(D, _nice_td_of(D))
    assert res.opt_size == 1 and res.witness == {0}


def test_directed_cycle():
    D = DirectedGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    res = dp_solve(D, _nice_td_of(D))
    assert res.opt_size == 1


def test_antiparallel_pair():
    D = DirectedGraph(2, [(0, 1), (1, 0)])
    res = dp_solve(D, _nice_td_of(D))
    assert res.opt_size == 1


def test_matches_oracle_on_fixed_gadgets():
    cases = [
        DirectedGraph(3, [(0, 1), (0, 2)]),
        DirectedGraph(4, [(0, 1), (1, 2), (1, 3)]),
        DirectedGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 3)]),
        DirectedGraph(4, [(0, 2), (1, 2), (2, 3), (3, 1)]),
    ]
    for D in cases:
        res = dp_solve(D, _nice_td_of(D))
        ref = exact_directed_pds(D)
        assert res.opt_size == ref.opt_size
        assert directed_closure(D, res.witness) == frozenset(range(D.n))


def test_matches_oracle_on_random_partial_2trees():
    for seed in range(40):
        n = 4 + seed % 6
        D, td = gen_partial_2tree_digraph(n, (seed, "dp"))
        res = dp_solve(D, to_nice(td))
        ref = exact_directed_pds(D)
        assert res.opt_size == ref.opt_size, (seed, res.opt_size, ref.opt_size)
        assert directed_closure(D, res.witness) == frozenset(range(n))


def test_census_entries():
    D = DirectedGraph(3, [(0, 1), (1, 2)])
    ntd = _nice_td_of(D)
    census = []
    dp_solve(D, ntd, census)
    assert len(census) == len(ntd.bags)
    for entry in census:
        assert entry["live_states"] >= 1
        assert entry["kind"] in ("Leaf", "Insert", "Forget", "Join")
