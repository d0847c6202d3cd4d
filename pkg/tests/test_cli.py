import json
import subprocess
import sys

import pytest

from treespan import cli, io


def run(*argv):
    result, text = cli.run(list(argv))
    return result.exit_code, text


@pytest.fixture
def one_clause(tmp_path):
    cnf = tmp_path / "one_clause.cnf"
    cnf.write_text("p cnf 3 1\n1 2 -3 0\n")
    return cnf


@pytest.fixture
def counterexample_files(tmp_path):
    graph, tree = tmp_path / "g.el", tmp_path / "t.el"
    code, _ = run("gen", "counterexample", "--t", "3", "--emit-graph", str(graph), "--emit-tree", str(tree))
    assert code == 0
    return graph, tree


class TestGen:
    def test_counterexample_t3(self, counterexample_files):
        graph, tree = counterexample_files
        g = io.read_graph(graph)
        assert g.n == 10
        assert io.read_tree(tree, g).root == "u"

    def test_counterexample_json(self):
        code, text = run("gen", "counterexample", "--t", "2", "--format", "json")
        body = json.loads(text)
        assert code == 0 and body["n"] == 7 and body["center"] == ["u"]

    def test_counterexample_needs_t(self):
        assert run("gen", "counterexample")[0] == 2

    def test_counterexample_bad_t(self):
        assert run("gen", "counterexample", "--t", "1")[0] == 2

    def test_reduction(self, one_clause):
        code, text = run("gen", "reduction", "--cnf", str(one_clause), "--format", "json")
        body = json.loads(text)
        assert code == 0 and (body["n"], body["m"]) == (20, 45)

    def test_reduction_with_tail(self, one_clause):
        code, text = run("gen", "reduction", "--cnf", str(one_clause), "--t", "6", "--format", "json")
        body = json.loads(text)
        assert code == 0 and body["n"] == 28 and body["center"] == ["r2@tail", "r3@tail"]

    def test_reduction_small_t(self, one_clause):
        assert run("gen", "reduction", "--cnf", str(one_clause), "--t", "4")[0] == 2

    def test_reduction_bad_assignment(self, one_clause):
        assert run("gen", "reduction", "--cnf", str(one_clause), "--assignment", "x1=0,x2=0,x3=1")[0] == 2

    def test_el_output_reparses(self, one_clause):
        _, text = run("gen", "reduction", "--cnf", str(one_clause), "--assignment", "x1=0,x2=1,x3=1")
        assert io.parse_edge_list(text).n == 20


class TestVerify:
    def test_assignment_tree(self, one_clause, tmp_path):
        graph, tree = tmp_path / "f.el", tmp_path / "t.el"
        run("gen", "reduction", "--cnf", str(one_clause), "--assignment", "x1=0,x2=1,x3=1",
            "--emit-graph", str(graph), "--emit-tree", str(tree))
        code, text = run("verify", "--graph", str(graph), "--tree", str(tree), "--t", "4", "--max-diam", "5",
                         "--format", "json")
        assert code == 0 and json.loads(text)["diameter"] <= 5

    def test_lifted(self, one_clause, tmp_path):
        graph, tree = tmp_path / "h.el", tmp_path / "t.el"
        run("gen", "reduction", "--cnf", str(one_clause), "--assignment", "x1=0,x2=1,x3=1", "--t", "5",
            "--emit-graph", str(graph), "--emit-tree", str(tree))
        assert run("verify", "--graph", str(graph), "--tree", str(tree), "--t", "5", "--max-diam", "6")[0] == 0

    def test_counterexample_diameter_too_big(self, counterexample_files):
        graph, tree = counterexample_files
        assert run("verify", "--graph", str(graph), "--tree", str(tree), "--t", "3")[0] == 0
        assert run("verify", "--graph", str(graph), "--tree", str(tree), "--t", "3", "--max-diam", "4")[0] == 1

    def test_not_a_tree(self, counterexample_files):
        graph, _ = counterexample_files
        assert run("verify", "--graph", str(graph), "--tree", str(graph), "--t", "3")[0] == 2

    def test_missing_file(self, tmp_path):
        assert run("verify", "--graph", str(tmp_path / "nope"), "--tree", "x", "--t", "3")[0] == 2


class TestOtherCommands:
    def test_decide3d4_counterexample(self, counterexample_files):
        graph, _ = counterexample_files
        assert run("decide3d4", "--graph", str(graph))[0] == 1

    def test_decide3d4_found(self, tmp_path):
        graph, tree = tmp_path / "p.el", tmp_path / "t.el"
        graph.write_text("a b\nb c\nc d\nd e\n")
        code, text = run("decide3d4", "--graph", str(graph), "--emit-tree", str(tree), "--format", "json")
        assert code == 0 and json.loads(text)["hub"] == "c"
        assert io.read_tree(tree, io.read_graph(graph)).root == "c"

    def test_tstar(self, tmp_path):
        graph = tmp_path / "c8.el"
        graph.write_text("".join(f"c{i} c{(i + 1) % 8}\n" for i in range(8)))
        assert run("tstar", "--graph", str(graph), "--t", "4")[0] == 1
        code, text = run("tstar", "--graph", str(graph), "--t", "8", "--format", "json")
        assert code == 0 and len(json.loads(text)["centers"]) == 8

    def test_normalize(self, tmp_path):
        graph, tree = tmp_path / "g.el", tmp_path / "t.el"
        graph.write_text("k p\nk q\nk r\nq r\n")
        tree.write_text("root k\nk p\nk q\nq r\n")
        code, text = run("normalize", "--graph", str(graph), "--tree", str(tree), "--t", "3", "--center", "k",
                         "--format", "json")
        body = json.loads(text)
        assert code == 0 and body["swaps"] == [[["q", "r"], ["k", "r"]]]

    def test_normalize_precondition(self, counterexample_files):
        graph, tree = counterexample_files
        assert run("normalize", "--graph", str(graph), "--tree", str(tree), "--t", "3", "--center", "u,v")[0] == 2

    def test_sat(self, one_clause, tmp_path):
        assert run("sat", "--cnf", str(one_clause))[0] == 0
        cube = tmp_path / "cube.cnf"
        cube.write_text("p cnf 3 8\n" + "".join(
            f"{a} {b} {c} 0\n" for a in (1, -1) for b in (2, -2) for c in (3, -3)))
        assert run("sat", "--cnf", str(cube))[0] == 1

    def test_oracle_spanner(self, counterexample_files):
        graph, _ = counterexample_files
        assert run("oracle", "spanner", "--graph", str(graph), "--t", "3", "--max-diam", "4")[0] == 1
        assert run("oracle", "spanner", "--graph", str(graph), "--t", "3", "--max-diam", "5")[0] == 0

    def test_oracle_sps(self, one_clause, tmp_path):
        graph = tmp_path / "f.el"
        run("gen", "reduction", "--cnf", str(one_clause), "--emit-graph", str(graph))
        code, text = run("oracle", "sps", "--graph", str(graph), "--t", "4", "--center", "u,v", "--format", "json")
        assert code == 0 and json.loads(text)["center"] == ["u", "v"]

    def test_oracle_budget(self, tmp_path):
        graph = tmp_path / "k9.el"
        graph.write_text("".join(f"v{i} v{j}\n" for i in range(9) for j in range(i + 1, 9)))
        code, text = run("oracle", "spanner", "--graph", str(graph), "--t", "1", "--max-nodes", "20",
                         "--format", "json")
        assert code == 3 and json.loads(text)["reason"] == "max_nodes"

    def test_unknown_flag(self):
        assert run("sat", "--bogus")[0] == 2

    def test_dot(self, counterexample_files):
        graph, tree = counterexample_files
        _, text = run("gen", "counterexample", "--t", "3", "--format", "dot")
        assert text.startswith("graph") and "penwidth=3" in text

    def test_json_is_stable(self):
        assert run("gen", "counterexample", "--t", "5", "--format", "json") == \
            run("gen", "counterexample", "--t", "5", "--format", "json")


def test_console_entry_point(one_clause):
    proc = subprocess.run([sys.executable, "-m", "treespan.cli", "sat", "--cnf", str(one_clause)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("# status: found")
