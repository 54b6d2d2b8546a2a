"""Closure engine tests: rules, order-independence, traces, kernels."""

import random

import numpy as np
import pytest

from powerdom import _closure_py
from powerdom.generators import gen_grid, gen_random_graph, gen_triangle_chain
from powerdom.graph import DirectedGraph, UndirectedGraph
from powerdom.propagation import (
    KERNEL,
    closure,
    closure_random_order,
    closure_trace,
    directed_closure,
    is_feasible,
)


def test_kernel_identifies_itself():
    assert KERNEL in ("compiled", "python")


def test_rule1_only():
    G = UndirectedGraph(4, [(0, 1), (0, 2)])  # star plus isolated node 3
    assert closure(G, {0}) == {0, 1, 2}
    assert not is_feasible(G, {0})
    assert is_feasible(G, {0, 3})


def test_rule2_propagates_along_path():
    G = UndirectedGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert closure(G, {0}) == {0, 1, 2, 3, 4}


def test_rule2_blocked_by_branching():
    # Node 1 has two undominated neighbors, so nothing fires.
    G = UndirectedGraph(4, [(0, 1), (1, 2), (1, 3)])
    assert closure(G, {0}) == {0, 1}


def test_empty_seed():
    G = UndirectedGraph(3, [(0, 1), (1, 2)])
    assert closure(G, set()) == frozenset()


def test_seed_out_of_range():
    G = UndirectedGraph(3, [(0, 1)])
    with pytest.raises(ValueError):
        closure(G, {3})


def test_triangle_chain_single_node_suffices():
    G = gen_triangle_chain(5)
    assert is_feasible(G, {0})


def test_order_independence_sample():
    rng = random.Random(0)
    for i in range(25):
        G = gen_random_graph(12, 0.25, i)
        S = rng.sample(range(12), 2)
        ref = closure(G, S)
        for _ in range(5):
            assert closure_random_order(G, S, rng) == ref


def test_kernels_agree():
    # Compare whatever kernel is active against the pure-Python twin.
    for i in range(20):
        G = gen_random_graph(15, 0.2, (i, "k"))
        S = [i % 15]
        indptr, indices = G.csr
        seed = np.zeros(G.n, dtype=np.uint8)
        seed[S[0]] = 1
        ref = _closure_py.closure_mask(indptr, indices, G.n, seed)
        got = sorted(closure(G, S))
        assert got == [v for v in range(G.n) if ref[v]]


class TestTrace:
    def test_stages_monotone_and_final(self):
        G, _ = gen_grid(3, 3)
        tr = closure_trace(G, {0})
        for a, b in zip(tr.stages, tr.stages[1:]):
            assert a < b
        assert tr.closure == closure(G, {0})

    def test_steps_account_for_everything(self):
        G, _ = gen_grid(2, 4)
        tr = closure_trace(G, {0, 5})
        seen = set()
        for rule, actor, added in tr.steps:
            assert rule in ("R1", "R2")
            seen |= added
        assert seen == tr.closure

    def test_exteriors_lengths(self):
        G, _ = gen_grid(3, 3)
        tr = closure_trace(G, {4})
        assert len(tr.exteriors) == len(tr.stages)

    def test_to_dict_sorted(self):
        G = UndirectedGraph(3, [(0, 1), (1, 2)])
        d = closure_trace(G, {0}).to_dict()
        assert d["stages"][0] == [0, 1]
        assert d["steps"][0]["rule"] == "R1"


class TestDirectedClosure:
    def test_out_neighbor_domination(self):
        D = DirectedGraph(3, [(0, 1), (1, 2)])
        assert directed_closure(D, {0}) == {0, 1, 2}

    def test_in_arcs_do_not_dominate(self):
        D = DirectedGraph(2, [(1, 0)])
        assert directed_closure(D, {0}) == {0}

    def test_forcing_counts_out_neighbors_only(self):
        # 0 dominates 1; 1 has out-neighbors 2 and 3, so no forcing.
        D = DirectedGraph(4, [(0, 1), (1, 2), (1, 3)])
        assert directed_closure(D, {0}) == {0, 1}

    def test_directed_kernels_agree(self):
        for i in range(15):
            n = 10
            rng = random.Random(i)
            arcs = [(u, v) for u in range(n) for v in range(n)
                    if u != v and rng.random() < 0.2]
            D = DirectedGraph(n, arcs)
            out_ip, out_ix, in_ip, in_ix = D.csr
            seed = np.zeros(n, dtype=np.uint8)
            seed[i % n] = 1
            ref = _closure_py.directed_closure_mask(out_ip, out_ix, in_ip, in_ix, n, seed)
            got = sorted(directed_closure(D, {i % n}))
            assert got == [v for v in range(n) if ref[v]]
