"""Exhaustive oracle tests."""

import pytest

from powerdom.errors import BudgetExceededError
from powerdom.exact import exact_directed_pds, exact_dominating_set, exact_pds
from powerdom.generators import gen_grid, gen_random_graph, gen_triangle_chain
from powerdom.graph import DirectedGraph, UndirectedGraph
from powerdom.propagation import directed_closure, is_feasible


class TestExactPds:
    def test_triangle(self):
        G = UndirectedGraph(3, [(0, 1), (1, 2), (0, 2)])
        res = exact_pds(G)
        assert res.opt_size == 1 and res.witness == {0}

    def test_grid_3x3(self):
        G, _ = gen_grid(3, 3)
        assert exact_pds(G).opt_size == 1

    def test_witness_is_canonical(self):
        # Lexicographically first feasible set of optimal size.
        G = gen_triangle_chain(3)
        assert exact_pds(G).witness == {0}

    def test_witness_feasible(self):
        for seed in range(8):
            G = gen_random_graph(9, 0.25, (seed, "ex"))
            res = exact_pds(G)
            assert is_feasible(G, res.witness)
            assert len(res.witness) == res.opt_size

    def test_budget_exceeded(self):
        G = gen_random_graph(12, 0.1, 3)
        with pytest.raises(BudgetExceededError) as err:
            exact_pds(G, budget=5)
        assert err.value.explored == 5

    def test_size_cap_exhaustion_reports_lower_bound(self):
        G = UndirectedGraph(4, [(0, 1), (2, 3)])  # needs 2 picks
        with pytest.raises(BudgetExceededError) as err:
            exact_pds(G, size_cap=1)
        assert err.value.lower_bound == 1

    def test_empty_graph(self):
        assert exact_pds(UndirectedGraph(0, [])).opt_size == 0


class TestExactDirectedPds:
    def test_path(self):
        D = DirectedGraph(4, [(0, 1), (1, 2), (2, 3)])
        res = exact_directed_pds(D)
        assert res.opt_size == 1 and res.witness == {0}

    def test_in_degree_zero_nodes_mandatory(self):
        D = DirectedGraph(4, [(0, 2), (1, 2), (2, 3)])
        res = exact_directed_pds(D)
        assert {0, 1} <= res.witness

    def test_witness_feasible(self):
        import random
        for seed in range(8):
            rng = random.Random(seed)
            arcs = [(u, v) for u in range(8) for v in range(8)
                    if u != v and rng.random() < 0.2]
            D = DirectedGraph(8, arcs)
            res = exact_directed_pds(D)
            assert directed_closure(D, res.witness) == frozenset(range(8))


class TestExactDominatingSet:
    def test_star(self):
        G = UndirectedGraph(5, [(0, i) for i in range(1, 5)])
        assert exact_dominating_set(G).opt_size == 1

    def test_path5_needs_two(self):
        G = UndirectedGraph(5, [(i, i + 1) for i in range(4)])
        assert exact_dominating_set(G).opt_size == 2

    def test_at_least_pds(self):
        for seed in range(8):
            G = gen_random_graph(8, 0.3, (seed, "ds"))
            assert exact_dominating_set(G).opt_size >= exact_pds(G).opt_size
