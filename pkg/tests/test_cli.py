import json

import pytest

from graphtheta.cli import main
from graphtheta.graph6 import to_graph6
from graphtheta.treegen import enumerate_trees

from conftest import cycle_graph, path_graph


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestIndex:
    def test_cycle(self, capsys, tmp_path):
        inp = tmp_path / "c6.g6"
        inp.write_text(to_graph6(cycle_graph(6)) + "\n")
        code, out, _ = run(capsys, "index", "--in", str(inp))
        assert code == 0
        row = out.splitlines()[-1].split(",")
        assert row[1:3] == ["6", "6"]
        assert row[6] == "4.24264069"  # 6/sqrt(2), 9 significant digits
        assert row[-1] == "zero"

    def test_single_edge_all_zero(self, capsys, tmp_path):
        inp = tmp_path / "p2.g6"
        inp.write_text("A_\n")
        code, out, _ = run(capsys, "index", "--in", str(inp))
        assert code == 0
        assert out.splitlines()[-1].split(",")[5:8] == ["0", "0", "0"]

    def test_malformed_line_exit_2(self, capsys, tmp_path):
        inp = tmp_path / "bad.g6"
        inp.write_text("A_\nnot-a-graph6-line!!\n")
        code, out, err = run(capsys, "index", "--in", str(inp))
        assert code == 2
        assert "line 2" in err
        assert len(out.splitlines()) == 3  # schema + header + 1 good row

    def test_json_format(self, capsys, tmp_path):
        inp = tmp_path / "p5.g6"
        inp.write_text(to_graph6(path_graph(5)) + "\n")
        code, out, _ = run(capsys, "index", "--in", str(inp), "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert rows[0]["sign"] == "positive"


class TestScan:
    def test_range(self, capsys):
        code, out, _ = run(capsys, "scan", "3..5")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("# schema: scan-v1")
        assert len(lines) == 5

    def test_single_order_with_witnesses(self, capsys, tmp_path):
        wfile = tmp_path / "neg.g6"
        code, out, _ = run(capsys, "scan", "11", "--witness-out", str(wfile))
        assert code == 0
        assert ",235,234,1,0," in out.splitlines()[-1]
        witness_lines = [
            l for l in wfile.read_text().splitlines() if not l.startswith("#")
        ]
        assert len(witness_lines) == 1

    def test_bad_range(self, capsys):
        code, _, err = run(capsys, "scan", "2..5")
        assert code == 2

    def test_json(self, capsys):
        code, out, _ = run(capsys, "scan", "6..6", "--format", "json")
        records = json.loads(out)
        assert records[0]["total"] == 6 and records[0]["negative"] == 0


class TestNearTies:
    def test_top_k(self, capsys):
        code, out, _ = run(capsys, "near-ties", "8", "--top-k", "3")
        assert code == 0
        assert len(out.splitlines()) == 5


class TestVerify:
    def test_p1_ok(self, capsys):
        code, out, _ = run(capsys, "verify", "p1", "--max-order", "5")
        assert code == 0
        assert json.loads(out)["conclusion_failures"] == []

    def test_p2_reproducible(self, capsys):
        code1, out1, _ = run(capsys, "verify", "p2", "--trials", "300", "--seed", "9")
        code2, out2, _ = run(capsys, "verify", "p2", "--trials", "300", "--seed", "9")
        assert code1 == code2 == 0
        r1, r2 = json.loads(out1), json.loads(out2)
        r1.pop("elapsed"), r2.pop("elapsed")
        assert r1 == r2

    def test_t1_path_universe_vacuous(self, capsys, tmp_path):
        inp = tmp_path / "paths.g6"
        inp.write_text(to_graph6(path_graph(7)) + "\n")
        code, out, _ = run(
            capsys, "verify", "t1", "--in", str(inp), "--order", "7"
        )
        assert code == 0
        report = json.loads(out)
        assert report["checked"] == 1 and report["hypothesis_holds"] == 0

    def test_t2_t3_ok(self, capsys):
        for stmt in ("t2", "t3"):
            code, out, _ = run(capsys, "verify", stmt, "--max-order", "5")
            assert code == 0

    def test_internal_order_bound(self, capsys):
        code, _, err = run(capsys, "verify", "t1", "--max-order", "9")
        assert code == 2 and "order" in err


class TestEnum:
    def test_trees(self, capsys):
        code, out, _ = run(capsys, "enum", "trees", "4")
        assert code == 0 and len(out.splitlines()) == 2

    def test_connected(self, capsys):
        code, out, _ = run(capsys, "enum", "connected", "4")
        assert code == 0 and len(out.splitlines()) == 6

    def test_connected_order_bound(self, capsys):
        code, _, err = run(capsys, "enum", "connected", "8")
        assert code == 2

    def test_tree_stream_matches_library(self, capsys, tmp_path):
        out_path = tmp_path / "t7.g6"
        code, _, _ = run(capsys, "enum", "trees", "7", "--out", str(out_path))
        assert code == 0
        expected = [to_graph6(g) for g in enumerate_trees(7)]
        assert out_path.read_text().splitlines() == expected
