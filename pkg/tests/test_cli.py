import io
import json
import subprocess
import sys

import pytest

from tlgrowth.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def result_lines(text):
    return [line for line in text.splitlines() if not line.startswith("# ")]


@pytest.fixture
def single_vertex(tmp_path):
    p = tmp_path / "single-vertex"
    p.write_text('{"version": 1, "vertices": 1, "edges": []}')
    return str(p)


def test_dim_b4():
    code, out, _ = call("dim", "--preset", "B", "4")
    assert code == 0
    assert result_lines(out) == ["83"]
    assert "# cap 16" in out.splitlines()
    assert "# order deglex p1<p2<...<pn" in out.splitlines()


def test_growth_tilde_a3():
    code, out, _ = call("growth", "--preset", "tilde-A", "3")
    assert code == 0 and result_lines(out) == ["polynomial degree 1 (linear)"]


def test_dim_single_vertex(single_vertex):
    code, out, _ = call("dim", "--graph", single_vertex)
    assert code == 0 and result_lines(out) == ["2"]


def test_dim_infinite_json():
    code, out, _ = call("dim", "--preset", "tilde-C 2", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["dim"] == "infinite" and doc["schema"] == 1
    assert doc["basis_status"] == "complete"


def test_gb_output():
    code, out, _ = call("gb", "--preset", "A", "2")
    assert code == 0
    assert result_lines(out) == ["p1*p1 -> p1", "p2*p2 -> p2", "p1*p2*p1 -> t*p1", "p2*p1*p2 -> t*p2"]
    assert "# basis complete, 4 rules" in out


def test_gb_specialised():
    code, out, _ = call("gb", "--preset", "A", "2", "--tau", "1/2")
    assert "p1*p2*p1 -> (1/2)*p1" in result_lines(out)
    assert "# params t=1/2, t1=1/2, t2=1/2" in out


def test_gb_order_option():
    code, out, _ = call("gb", "--preset", "A", "3", "--order", "3,2,1")
    assert code == 0 and "# order deglex p3<p2<p1" in out
    assert "p1*p3 -> p3*p1" in result_lines(out)
    code, _, err = call("gb", "--preset", "A", "3", "--order", "2,1")
    assert code == 2 and "usage error" in err


def test_hilbert_csv_and_json():
    code, out, _ = call("hilbert", "--preset", "tilde-A", "3", "--max-degree", "4", "--format", "csv")
    assert code == 0
    assert result_lines(out) == ["degree,count", "0,1", "1,3", "2,6", "3,6", "4,6"]
    code, out, _ = call("hilbert", "--preset", "tilde-A", "3", "--max-degree", "4", "--json")
    assert json.loads(out)["counts"] == [1, 3, 6, 6, 6]


def test_big_label_assumption_echoed():
    _, out, _ = call("dim", "--preset", "tilde-G2")
    assert result_lines(out) == ["11"]
    assert any(line.startswith("# assumption") for line in out.splitlines())


def test_growth_graph_export(tmp_path):
    path = tmp_path / "edges.txt"
    code, out, _ = call("growth-graph", "--preset", "tilde-A", "3", "--export", str(path))
    assert code == 0
    assert "vertices 6" in out and "cyclic components 2 (sizes 3, 3)" in out
    edges = path.read_text().splitlines()
    assert len(edges) == 6 and all(" -> " in e for e in edges)


def test_witness_commands():
    code, out, _ = call("witness", "--preset", "star", "6", "--q1", "2,3,4,2,1,5", "--q2", "2,3,4,2,1,6",
                        "--max-degree", "12")
    assert code == 0
    lines = result_lines(out)
    assert lines[0].startswith("accepted: window 2")
    assert "12,4" in lines
    code, out, _ = call("witness", "--preset", "fig", "4.15", "--fixture", "4.15")
    assert code == 1 and result_lines(out)[0].startswith("rejected")
    code, _, err = call("witness", "--preset", "A", "3", "--q1", "1,2")
    assert code == 2


def test_witness_capped_is_unverifiable():
    code, out, _ = call("witness", "--preset", "fig", "4.4", "--fixture", "4.4", "--cap", "10")
    assert code == 1 and "unverifiable" in out


def test_classify_commands():
    code, out, _ = call("classify", "--preset", "A", "4")
    assert code == 0 and result_lines(out) == ["finite (A4, dim 42)"]
    code, out, _ = call("classify", "--preset", "H", "4", "--cross-check")
    assert code == 0
    assert result_lines(out) == ["theorem: finite (H4, dim 195)", "computed: finite-dimensional, dim 195", "agreement: yes"]
    code, out, _ = call("classify", "--preset", "fig", "4.14", "--cross-check", "--json")
    doc = json.loads(out)
    assert doc["agreement"] and doc["computed_class"]["kind"] == "exponential"


def test_preset_commands():
    code, out, _ = call("preset", "list")
    assert code == 0 and "tilde-C N" in out
    code, out, _ = call("preset", "show", "fig", "4.15")
    assert code == 0
    assert json.loads(out.splitlines()[0])["vertices"] == 4
    assert "fails as printed" in out


def test_sweep_command(tmp_path):
    dest = tmp_path / "sweep.csv"
    code, out, _ = call("sweep", "--max-vertices", "2", "--labels", "3,inf", "--output", str(dest))
    rows = dest.read_text().splitlines()
    assert code == 0
    assert rows[0] == "graph,theorem_class,computed_class,dim,agreement"
    assert rows[1:] == ["1:,finite[A1],finite,2,yes", "2:1-2,finite[A2],finite,5,yes",
                        "2:1-2/inf,linear[tilde-A1],polynomial(1),,yes"]


@pytest.mark.parametrize(
    "argv",
    [
        ["dim"],
        ["dim", "--preset", "B", "4", "--graph", "x.json"],
        ["nonsense"],
        ["dim", "--preset", "B", "4", "--cap", "1"],
        ["hilbert", "--preset", "B", "4", "--max-degree", "-1"],
        ["dim", "--preset", "B", "4", "--param", "t"],
    ],
)
def test_usage_errors(argv):
    code, _, _ = call(*argv)
    assert code == 2


def test_domain_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"version": 1, "vertices": 3,\n  "edges": [[1, 2, 3], [2, 2, 3]]}')
    code, _, err = call("dim", "--graph", str(bad))
    assert code == 1 and "edges[1]: loop" in err
    bad.write_text('{"version": 1, "vertices": 3,\n  "edges": [[1, 2, 3]')
    code, _, err = call("dim", "--graph", str(bad))
    assert code == 1 and "line 2" in err
    assert call("dim", "--preset", "D", "3")[0] == 1
    assert call("dim", "--graph", str(tmp_path / "missing.json"))[0] == 1
    assert call("dim", "--preset", "A", "2", "--tau", "0")[0] == 1
    disconnected = tmp_path / "two.json"
    disconnected.write_text('{"version": 1, "vertices": 2, "edges": []}')
    assert call("dim", "--graph", str(disconnected))[0] == 1


def test_capped_dim_warns():
    code, out, _ = call("dim", "--preset", "E", "6", "--cap", "4")
    assert code == 0 and "# warning: basis capped at degree 4" in out


def test_deterministic_output():
    runs = [call("gb", "--preset", "tilde-C", "2", "--json") for _ in range(3)]
    assert runs[0] == runs[1] == runs[2]
    runs = [call("hilbert", "--preset", "H", "3", "--max-degree", "9") for _ in range(2)]
    assert runs[0] == runs[1]


def test_json_roundtrip():
    _, out, _ = call("growth", "--preset", "star", "6", "--json")
    doc = json.loads(out)
    assert json.loads(json.dumps(doc, sort_keys=True)) == doc
    assert doc["class"] == {"kind": "exponential"}
    assert set(doc) >= {"schema", "graph", "order", "cap", "params", "basis_status", "rules"}


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tlgrowth.cli", "dim", "--preset", "l2", "7"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "13"
