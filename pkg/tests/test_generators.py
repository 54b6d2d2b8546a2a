"""Instance generators and the cover-testing reductions."""

import pytest

from powerdom.decomposition import validate_td
from powerdom.exact import exact_dominating_set, exact_pds
from powerdom.generators import (
    MinRepInstance,
    block_centers,
    gen_augmented,
    gen_greedy_bad,
    gen_grid,
    gen_minrep_random,
    gen_partial_ktree,
    gen_proximity_bad,
    gen_random_graph,
    gen_random_tree,
    gen_triangle_chain,
    log2_ceil,
    minrep_opt,
    reduce_minrep_to_directed_pds,
    reduce_minrep_to_pds,
    white_nodes,
)
from powerdom.propagation import closure, is_feasible


class TestGrid:
    def test_counts(self):
        G, td = gen_grid(3, 3)
        assert G.n == 9 and G.m == 12
        assert validate_td(G, td) == 3

    def test_single_node(self):
        G, td = gen_grid(1, 1)
        assert G.n == 1 and G.m == 0
        validate_td(G, td)

    def test_rejects_bad_dims(self):
        with pytest.raises(ValueError):
            gen_grid(0, 3)


class TestTriangleChain:
    def test_size_and_degree(self):
        for t in (1, 3, 7):
            G = gen_triangle_chain(t)
            assert G.n == 3 * t
            assert max(G.degree(v) for v in range(G.n)) <= 4

    def test_first_triangle_dominates_all(self):
        G = gen_triangle_chain(3)
        assert closure(G, {0}) == frozenset(range(9))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            gen_triangle_chain(0)


class TestAugmented:
    def test_single_node(self):
        G = gen_augmented(gen_random_graph(1, 0, 0))
        assert G.n == 2 and G.m == 1

    def test_triangle(self):
        from powerdom.graph import UndirectedGraph
        G = gen_augmented(UndirectedGraph(3, [(0, 1), (1, 2), (0, 2)]))
        assert G.n == 6
        assert exact_pds(G).opt_size == 1

    def test_pds_equals_ds_of_original(self):
        for seed in range(8):
            H = gen_random_graph(6, 0.35, (seed, "aug"))
            G = gen_augmented(H)
            assert exact_pds(G).opt_size == exact_dominating_set(H).opt_size


class TestGreedyBad:
    def test_node_count_formula(self):
        for l, m in ((1, 1), (1, 2), (2, 1)):
            G = gen_greedy_bad(l, m)
            rows, cols = 9 * l, 9 * m
            subdivided = rows * (cols - 1) - 8
            assert G.n == rows * cols + subdivided

    def test_centers_attain_max_coverage(self):
        G = gen_greedy_bad(1, 2)
        gains = {v: len(closure(G, {v})) for v in range(G.n)}
        assert max(gains.values()) == 7
        for c in block_centers(1, 2):
            assert gains[c] == 7

    def test_first_column_feasible(self):
        G = gen_greedy_bad(1, 3)
        assert is_feasible(G, [r * 27 for r in range(9)])

    def test_rejects_bad_dims(self):
        with pytest.raises(ValueError):
            gen_greedy_bad(0, 1)


class TestProximityBad:
    def test_white_coverage(self):
        G = gen_proximity_bad(9, 3, 5)
        for w in white_nodes(9, 3):
            assert len(closure(G, {w})) == 17

    def test_first_column_feasible(self):
        G = gen_proximity_bad(9, 2, 5)
        assert is_feasible(G, [r * 5 for r in range(9)])

    def test_rejects_bad_params(self):
        with pytest.raises(ValueError):
            gen_proximity_bad(8, 1, 1)
        with pytest.raises(ValueError):
            gen_proximity_bad(7, 1, 1)
        with pytest.raises(ValueError):
            gen_proximity_bad(9, 0, 1)


class TestMinRep:
    def test_parts_must_be_equal(self):
        with pytest.raises(ValueError):
            MinRepInstance(a_parts=((0,), (1, 2)), b_parts=((0,),), edges=frozenset({(0, 0)}))

    def test_covers_and_super_edges(self):
        M = MinRepInstance(
            a_parts=((0,), (1,)), b_parts=((0,), (1,)),
            edges=frozenset({(0, 0), (1, 1)}),
        )
        assert M.super_edges == [(0, 0), (1, 1)]
        assert M.covers({0, 1}, {0, 1})
        assert not M.covers({0}, {0, 1})

    def test_minrep_opt_tiny(self):
        M = MinRepInstance(
            a_parts=((0,),), b_parts=((0,),), edges=frozenset({(0, 0)})
        )
        size, witness = minrep_opt(M)
        assert size == 2 and witness == {("a", 0), ("b", 0)}

    def test_random_deterministic(self):
        a = gen_minrep_random(2, 2, 2, 0.5, 11)
        b = gen_minrep_random(2, 2, 2, 0.5, 11)
        assert a == b and a.edges

    def test_random_complete(self):
        M = gen_minrep_random(2, 2, 1, 1.0, 0)
        assert len(M.edges) == 4


class TestReductions:
    def test_undirected_size_formula(self):
        for seed in range(5):
            M = gen_minrep_random(2, 2, 1, 0.7, seed)
            lam = 4
            G = reduce_minrep_to_pds(M, lam)
            assert G.n == 4 + M.n_a + M.n_b + 3 * lam * len(M.edges)

    def test_directed_size_bound_and_acyclic(self):
        for seed in range(5):
            M = gen_minrep_random(2, 2, 1, 0.7, seed)
            lam = 4
            D = reduce_minrep_to_directed_pds(M, lam)
            assert D.n <= 1 + M.n_a + M.n_b + 7 * lam * len(M.edges)
            # Kahn peel proves acyclicity.
            indeg = [D.in_degree(v) for v in range(D.n)]
            queue = [v for v in range(D.n) if indeg[v] == 0]
            seen = 0
            while queue:
                v = queue.pop()
                seen += 1
                for w in D.out_neighbors(v):
                    indeg[w] -= 1
                    if indeg[w] == 0:
                        queue.append(w)
            assert seen == D.n

    def test_lambda_floor(self):
        M = gen_minrep_random(2, 2, 1, 0.7, 0)
        with pytest.raises(ValueError):
            reduce_minrep_to_pds(M, 3)
        with pytest.raises(ValueError):
            reduce_minrep_to_directed_pds(M, 3)

    def test_equality_one_instance(self):
        M = gen_minrep_random(2, 2, 1, 0.7, 10)
        mopt, _ = minrep_opt(M)
        res = exact_pds(reduce_minrep_to_pds(M), size_cap=mopt + 1)
        assert res.opt_size == mopt + 1 and 0 in res.witness


class TestRandomFamilies:
    def test_partial_ktree_valid(self):
        for seed in range(6):
            G, td = gen_partial_ktree(12, 3, (seed, "kt"), edge_keep=0.8)
            assert validate_td(G, td) <= 3

    def test_random_tree_is_tree(self):
        for seed in range(6):
            G = gen_random_tree(9, (seed, "rt"))
            assert G.m == G.n - 1

    def test_log2_ceil(self):
        assert [log2_ceil(n) for n in (1, 2, 3, 4, 9, 16, 17)] == [1, 1, 2, 2, 4, 4, 5]
