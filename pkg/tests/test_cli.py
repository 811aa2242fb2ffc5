import json
import subprocess
import sys

from periwiener.cli import enumerate_values_csv, main
from periwiener.graphio import parse_graph6
from periwiener.indices import index_vector


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestCompute:
    def test_p3_edge_list(self, tmp_path, capsys):
        f = tmp_path / "p3.el"
        f.write_text("3\n0 1\n1 2\n")
        rc, out, _ = run_cli(capsys, "compute", "--input", str(f), "--emit", "json")
        assert rc == 0
        (row,) = json.loads(out)
        assert row["w"] == 4 and row["pww"] == 3
        assert row["n"] == 3 and row["diameter"] == 2

    def test_gen_star_pipe_compute(self, tmp_path, capsys):
        f = tmp_path / "star.el"
        rc, _, _ = run_cli(capsys, "gen", "star", "4", "--output", str(f))
        assert rc == 0
        rc, out, _ = run_cli(capsys, "compute", "--input", str(f), "--emit", "json")
        assert rc == 0
        (row,) = json.loads(out)
        assert row["w"] == 16 and row["pww"] == 18

    def test_disconnected_exits_3(self, tmp_path, capsys):
        f = tmp_path / "two.el"
        f.write_text("4\n0 1\n2 3\n")
        rc, _, err = run_cli(capsys, "compute", "--input", str(f))
        assert rc == 3
        assert "not connected" in err

    def test_parse_error_exits_2(self, tmp_path, capsys):
        f = tmp_path / "bad.el"
        f.write_text("3\n0 zz\n")
        rc, _, err = run_cli(capsys, "compute", "--input", str(f))
        assert rc == 2
        assert "line 2" in err

    def test_graph6_multi_record(self, tmp_path, capsys):
        f = tmp_path / "many.g6"
        f.write_text("Bw\nBg\n")
        rc, out, _ = run_cli(capsys, "compute", "--input", str(f),
                             "--format", "graph6", "--emit", "csv")
        assert rc == 0
        lines = out.strip().splitlines()
        assert len(lines) == 3  # header + 2 graphs

    def test_cuts_method_on_tree(self, tmp_path, capsys):
        f = tmp_path / "t.el"
        f.write_text("5\n0 1\n0 2\n0 3\n3 4\n")
        rc, out, _ = run_cli(capsys, "compute", "--input", str(f),
                             "--method", "cuts", "--emit", "json")
        assert rc == 0
        (row,) = json.loads(out)
        assert row["pww"] == 15

    def test_cuts_method_rejects_cycles(self, tmp_path, capsys):
        f = tmp_path / "c4.el"
        f.write_text("4\n0 1\n1 2\n2 3\n3 0\n")
        rc, _, err = run_cli(capsys, "compute", "--input", str(f), "--method", "cuts")
        assert rc == 3

    def test_index_subset(self, tmp_path, capsys):
        f = tmp_path / "p3.el"
        f.write_text("3\n0 1\n1 2\n")
        rc, out, _ = run_cli(capsys, "compute", "--input", str(f),
                             "--indices", "pww", "--emit", "csv")
        assert rc == 0
        header = out.splitlines()[0]
        assert header.endswith("pww")
        assert ",w," not in header

    def test_unknown_index(self, tmp_path, capsys):
        rc, _, err = run_cli(capsys, "compute", "--indices", "bogus", "--input", "x")
        assert rc == 2


class TestGen:
    def test_hypercube_graph6(self, capsys):
        rc, out, _ = run_cli(capsys, "gen", "hypercube", "3", "--emit", "graph6")
        assert rc == 0
        g = parse_graph6(out.strip())
        assert g.n == 8 and g.m == 12

    def test_caterpillar_edge_list(self, capsys):
        rc, out, _ = run_cli(capsys, "gen", "caterpillar", "2,0,3")
        assert rc == 0
        lines = out.strip().splitlines()
        assert lines[0] == "8"
        assert len(lines) == 8  # n line + 7 edges

    def test_lobster(self, capsys):
        rc, out, _ = run_cli(capsys, "gen", "lobster", "1,0,1", "1")
        assert rc == 0
        assert out.strip().splitlines()[0] == "7"

    def test_cycle_too_small_exits_2(self, capsys):
        rc, _, err = run_cli(capsys, "gen", "cycle", "2")
        assert rc == 2

    def test_unknown_family_exits_2(self, capsys):
        rc, _, _ = run_cli(capsys, "gen", "dodecahedron", "1")
        assert rc == 2

    def test_random_tree_seeded(self, capsys):
        rc, out1, _ = run_cli(capsys, "gen", "random-tree", "8", "--seed", "3")
        assert rc == 0
        rc, out2, _ = run_cli(capsys, "gen", "random-tree", "8", "--seed", "3")
        assert out1 == out2

    def test_bad_arity(self, capsys):
        rc, _, _ = run_cli(capsys, "gen", "star")
        assert rc == 2


class TestAudit:
    def test_single_product_claim(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        rc, out, _ = run_cli(capsys, "audit", "--claims", "T-PWW-PROD",
                             "--trials", "5", "--threads", "1",
                             "--output", str(out_path))
        assert rc == 0
        assert "T-PWW-PROD" in out
        doc = json.loads(out_path.read_text())
        assert doc["claims"][0]["status"] == "holds"

    def test_hypercube_discrepancy_exits_0(self, capsys):
        rc, out, _ = run_cli(capsys, "audit", "--claims", "C-HYPERCUBE",
                             "--trials", "0", "--threads", "1")
        assert rc == 0
        assert "violated" in out and "discrepancy" in out

    def test_small_full_run(self, capsys):
        rc, out, _ = run_cli(capsys, "audit", "--max-n", "4", "--trials", "5",
                             "--threads", "1")
        assert rc == 0
        assert "0 mismatched" in out

    def test_bad_max_n(self, capsys):
        rc, _, err = run_cli(capsys, "audit", "--max-n", "12")
        assert rc == 2

    def test_unknown_claim(self, capsys):
        rc, _, err = run_cli(capsys, "audit", "--claims", "NOPE")
        assert rc == 2


class TestEnumerateValues:
    def test_pw_small(self, capsys):
        rc, out, _ = run_cli(capsys, "enumerate-values", "--indices", "pw",
                             "--max-n", "5", "--threads", "1")
        assert rc == 0
        lines = out.strip().splitlines()
        assert lines[0] == "value,n,graph6"
        values = {}
        for line in lines[1:]:
            if line.startswith("#"):
                continue
            val, n, g6 = line.split(",")
            values[int(val)] = (int(n), g6)
        assert values[1] == (2, "A_")
        assert values[2][0] == 3
        assert values[3][0] == 3
        for val, (n, g6) in values.items():
            g = parse_graph6(g6)
            assert g.n == n and index_vector(g).pw == val

    def test_range_violation(self, capsys):
        rc, _, _ = run_cli(capsys, "enumerate-values", "--max-n", "9")
        assert rc == 2
        rc, _, _ = run_cli(capsys, "enumerate-values", "--max-n", "1")
        assert rc == 2

    def test_deterministic_output(self):
        a = enumerate_values_csv("pww", 5, threads=1)
        b = enumerate_values_csv("pww", 5, threads=2)
        assert a == b
        assert "# non_attained: " in a

    def test_tw_includes_zero(self):
        csv_text = enumerate_values_csv("tw", 4, threads=1)
        first = csv_text.splitlines()[1]
        assert first.startswith("0,")


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "periwiener.cli", "gen", "path", "3",
             "--emit", "graph6"],
            capture_output=True, text=True, timeout=60,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == "Bg"

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
