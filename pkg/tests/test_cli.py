"""CLI behavior: commands, formats, exit codes."""

import json

import pytest

from powerdom import io as pio
from powerdom.cli import main
from powerdom.generators import gen_grid, gen_triangle_chain
from powerdom.graph import UndirectedGraph


@pytest.fixture
def grid_files(tmp_path):
    G, td = gen_grid(3, 4)
    gpath, tpath = tmp_path / "grid.gr", tmp_path / "grid.td"
    pio.save_graph(G, gpath)
    pio.save_td(td, tpath)
    return str(gpath), str(tpath)


def _json_out(capsys):
    return json.loads(capsys.readouterr().out)


class TestSolve:
    def test_exact_on_triangle_chain(self, tmp_path, capsys):
        path = tmp_path / "tri.gr"
        pio.save_graph(gen_triangle_chain(3), path)
        code = main(["solve", "--method", "exact", "--graph", str(path),
                     "--format", "json", "--no-time"])
        out = _json_out(capsys)
        assert code == 0 and out["size"] == 1 and out["feasible"]
        assert out["solution"] == [1]  # ids are 1-based on the wire

    def test_twd_approx_requires_td(self, grid_files, capsys):
        gpath, _ = grid_files
        assert main(["solve", "--method", "twd-approx", "--graph", gpath]) == 1

    def test_twd_approx_reports_certificate_bound(self, grid_files, capsys):
        gpath, tpath = grid_files
        code = main(["solve", "--method", "twd-approx", "--graph", gpath,
                     "--td", tpath, "--format", "json", "--no-time"])
        out = _json_out(capsys)
        assert code == 0 and out["feasible"]
        assert out["size"] <= (out["width"] + 1) * out["lower_bound"]

    def test_greedy_deterministic_json(self, grid_files, capsys):
        gpath, _ = grid_files
        main(["solve", "--method", "greedy", "--graph", gpath,
              "--format", "json", "--no-time"])
        first = capsys.readouterr().out
        main(["solve", "--method", "greedy", "--graph", gpath,
              "--format", "json", "--no-time"])
        assert capsys.readouterr().out == first

    def test_budget_exceeded_exit_code(self, grid_files, capsys):
        gpath, _ = grid_files
        assert main(["solve", "--method", "exact", "--graph", gpath,
                     "--budget", "2"]) == 3

    def test_directed_dp(self, tmp_path, capsys):
        from powerdom.decomposition import min_degree_order, td_from_elimination_order
        from powerdom.graph import DirectedGraph, underlying_undirected
        D = DirectedGraph(4, [(0, 1), (1, 2), (2, 3)])
        gpath, tpath = tmp_path / "d.gr", tmp_path / "d.td"
        pio.save_graph(D, gpath)
        G = underlying_undirected(D)
        pio.save_td(td_from_elimination_order(G, min_degree_order(G)), tpath)
        code = main(["solve", "--method", "directed-dp", "--graph", str(gpath),
                     "--td", str(tpath), "--format", "json", "--no-time",
                     "--dump-states"])
        out = _json_out(capsys)
        assert code == 0 and out["size"] == 1 and out["states"]

    def test_partition_reports_candidates(self, grid_files, capsys):
        gpath, _ = grid_files
        code = main(["solve", "--method", "partition", "--graph", gpath,
                     "--format", "json", "--no-time"])
        out = _json_out(capsys)
        assert code == 0 and out["candidates"] == 2 ** 4  # ceil(log2 12) = 4


class TestVerify:
    def test_feasible(self, tmp_path, capsys):
        gpath, spath = tmp_path / "g.gr", tmp_path / "s.txt"
        pio.save_graph(gen_triangle_chain(2), gpath)
        pio.save_node_set({0}, spath)
        code = main(["verify", "--graph", str(gpath), "--set", str(spath),
                     "--format", "json"])
        out = _json_out(capsys)
        assert code == 0 and out["feasible"] and not out["missing"]

    def test_infeasible_exit_2(self, tmp_path, capsys):
        gpath, spath = tmp_path / "g.gr", tmp_path / "s.txt"
        pio.save_graph(UndirectedGraph(4, [(0, 1), (1, 2), (1, 3)]), gpath)
        pio.save_node_set({0}, spath)
        code = main(["verify", "--graph", str(gpath), "--set", str(spath),
                     "--format", "json"])
        out = _json_out(capsys)
        assert code == 2 and out["missing"] == [3, 4]

    def test_trace_flag(self, tmp_path, capsys):
        gpath, spath = tmp_path / "g.gr", tmp_path / "s.txt"
        pio.save_graph(UndirectedGraph(3, [(0, 1), (1, 2)]), gpath)
        pio.save_node_set({0}, spath)
        code = main(["verify", "--graph", str(gpath), "--set", str(spath),
                     "--trace", "--format", "json"])
        out = _json_out(capsys)
        assert code == 0 and out["trace"]["stages"]


class TestTrace:
    def test_exteriors_in_output(self, tmp_path, capsys):
        gpath, spath = tmp_path / "g.gr", tmp_path / "s.txt"
        G, _ = gen_grid(3, 3)
        pio.save_graph(G, gpath)
        pio.save_node_set({0}, spath)
        code = main(["trace", "--graph", str(gpath), "--set", str(spath),
                     "--format", "json"])
        out = _json_out(capsys)
        assert code == 0 and len(out["exteriors"]) == len(out["stages"])


class TestGen:
    def test_grid_with_td(self, tmp_path):
        gpath, tpath = tmp_path / "g.gr", tmp_path / "g.td"
        code = main(["gen", "grid", "--rows", "3", "--cols", "4",
                     "--out", str(gpath), "--td-out", str(tpath)])
        assert code == 0
        G = pio.load_graph(gpath)
        td = pio.load_td(tpath)
        assert G.n == 12 and len(td.bags) > 0

    def test_missing_required_param(self, tmp_path):
        assert main(["gen", "grid", "--rows", "3",
                     "--out", str(tmp_path / "g.gr")]) == 1

    def test_td_out_unsupported_family(self, tmp_path):
        assert main(["gen", "triangle-chain", "--t", "2",
                     "--out", str(tmp_path / "t.gr"),
                     "--td-out", str(tmp_path / "t.td")]) == 1

    def test_minrep_reduce_pipeline(self, tmp_path, capsys):
        mpath, gpath = tmp_path / "m.mr", tmp_path / "r.gr"
        assert main(["gen", "minrep", "--qa", "2", "--qb", "2",
                     "--part-size", "1", "--p", "0.9", "--seed", "3",
                     "--out", str(mpath)]) == 0
        assert main(["gen", "reduce-pds", "--in", str(mpath),
                     "--out", str(gpath)]) == 0
        M = pio.load_minrep(mpath)
        G = pio.load_graph(gpath)
        assert G.n == 4 + M.n_a + M.n_b + 12 * len(M.edges)

    def test_greedy_bad_family(self, tmp_path):
        gpath = tmp_path / "gb.gr"
        assert main(["gen", "greedy-bad", "--l", "1", "--m", "2",
                     "--out", str(gpath)]) == 0
        # 162 grid nodes plus one subdivision node per subdivided row-edge.
        assert pio.load_graph(gpath).n == 162 + (9 * 17 - 8)


class TestBench:
    def test_greedy_gap_csv(self, tmp_path, capsys):
        out = tmp_path / "rows.csv"
        code = main(["bench", "--suite", "greedy-gap", "--out-csv", str(out)])
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "instance,method,size,opt_or_lb,ratio,feasible"
        assert len(lines) == 4

    def test_unknown_suite_is_usage_error(self, capsys):
        assert main(["bench", "--suite", "nope"]) == 1


class TestErrors:
    def test_parse_error_exit_1(self, tmp_path, capsys):
        bad = tmp_path / "bad.gr"
        bad.write_text("p pds 1 1\ne 1 2\n")
        assert main(["solve", "--method", "exact", "--graph", str(bad)]) == 1

    def test_missing_file_exit_1(self, capsys):
        assert main(["verify", "--graph", "/nonexistent.gr",
                     "--set", "/nonexistent.txt"]) == 1
