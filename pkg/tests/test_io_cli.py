import csv
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from cycext.cli import main, class_promises_extension
from cycext.constructions import H_HAT_HAMILTONIAN, build_H_hat, witness_cycle_names
from cycext.extendability import ExtensionSpec
from cycext.graph import complete_graph, cycle_graph
from cycext.io import FormatError, format_dot, format_edgelist, parse_edgelist, write_edgelist

from conftest import graphs


def edge_set(g):
    return {frozenset(e) for e in g.edge_names()}


# -- edge-list format ----------------------------------------------------------------


def test_parse_examples():
    g = parse_edgelist("# triangle\nvertices: a b c\na b\nb c  # inline\n\na c\n")
    assert g.n == 3 and g.num_edges() == 3
    assert parse_edgelist("vertices: lonely\n").n == 1


@pytest.mark.parametrize("text,line", [
    ("a b\n", 1),
    ("vertices: a b\na b\nb a\n", 3),
    ("vertices: a b\na a\n", 2),
    ("vertices: a b\na b c\n", 2),
    ("# nothing\n", None),
])
def test_parse_errors(text, line):
    with pytest.raises(FormatError) as info:
        parse_edgelist(text)
    assert info.value.line == line


def test_parse_rejects_unknown_vertex_and_bad_names():
    with pytest.raises(FormatError):
        parse_edgelist("vertices: a b\na z\n")
    with pytest.raises(FormatError):
        parse_edgelist("vertices: a b-c\n")


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=10))
def test_roundtrip_is_byte_identical(g):
    text = format_edgelist(g, ["roundtrip"])
    back = parse_edgelist(text)
    assert sorted(back.names) == sorted(g.names)
    assert edge_set(back) == edge_set(g)
    assert format_edgelist(back, ["roundtrip"]) == text


def test_dot_marks_heavy_edges():
    H = build_H_hat()
    dot = format_dot(H.graph, H.heavy, "h_hat")
    bold = [line for line in dot.splitlines() if "style=bold" in line]
    assert len(bold) == 10
    assert '"a" -- "v1" [style=bold, penwidth=3];' in dot
    assert dot.startswith('graph "h_hat" {') and dot.rstrip().endswith("}")


# -- command line ------------------------------------------------------------------


@pytest.fixture
def h_file(tmp_path, capsys):
    path = tmp_path / "h.txt"
    assert main(["construct", "--family", "h_hat", "--out", str(path)]) == 0
    capsys.readouterr()
    return path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_counts(capsys, tmp_path):
    out_file = tmp_path / "ce.txt"
    code, out, _ = run(capsys, "construct", "--family", "counterexample", "--n", "17", "--S",
                       "1,2,3", "--out", str(out_file))
    assert code == 0 and out.strip() == "vertices: 17 edges: " + out.split()[-1]
    assert parse_edgelist(out_file.read_text()).n == 17
    code, out, err = run(capsys, "construct", "--family", "star", "--p", "3", "--q", "3")
    assert code == 0 and parse_edgelist(out).n == 6
    assert "vertices: 6 edges: 12" in err


def test_construct_errors(capsys):
    code, _, err = run(capsys, "construct", "--family", "g", "--t", "0")
    assert code == 2 and "t must be >= 1" in err
    code, _, err = run(capsys, "construct", "--family", "counterexample", "--n", "14", "--S", "1")
    assert code == 2 and "minimum" in err


def test_construct_dot_and_figure(capsys, tmp_path):
    fig = tmp_path / "g.png"
    code, out, _ = run(capsys, "construct", "--family", "g_k", "--t", "2", "--k", "1",
                       "--format", "dot", "--figure", str(fig))
    assert code == 0 and out.count("style=bold") == 10
    assert fig.stat().st_size > 1000
    assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_verify_h_hat_passes(capsys, h_file):
    code, out, _ = run(capsys, "verify", str(h_file), "--checks", "all",
                       "--min-connectivity", "2")
    report = json.loads(out)
    assert code == 0 and report["pass"]
    by_name = {c["name"]: c for c in report["checks"]}
    assert set(by_name) == {"chordal", "strongly_chordal", "hamiltonian", "pancyclic",
                            "connectivity"}
    assert by_name["connectivity"]["value"] == 2
    assert len(by_name["hamiltonian"]["witness"]["cycle"]) == 15
    assert report["input"]["n"] == 15 and len(report["input"]["sha256"]) == 64


def test_verify_failures(capsys, tmp_path):
    c4 = tmp_path / "c4.txt"
    write_edgelist(cycle_graph(4), c4)
    code, out, _ = run(capsys, "verify", str(c4), "--checks", "chordal")
    assert code == 1 and json.loads(out)["checks"][0]["status"] == "FAIL"
    code, _, err = run(capsys, "verify", str(tmp_path / "missing.txt"))
    assert code == 2 and "no such file" in err
    code, _, _ = run(capsys, "verify", str(c4), "--checks", "planar")
    assert code == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("vertices: a b\na a\n")
    assert run(capsys, "verify", str(bad))[0] == 2


def test_verify_sun_witness(capsys, tmp_path):
    path = tmp_path / "sun.txt"
    from cycext.recognition import k_sun
    write_edgelist(k_sun(3).graph, path)
    code, out, _ = run(capsys, "verify", str(path), "--checks", "strongly_chordal")
    check = json.loads(out)["checks"][0]
    assert code == 1 and check["witness"]["pattern"] == "3-sun"


def test_extend_check_stuck_cycle(capsys, h_file):
    cycle = ",".join(witness_cycle_names(0))
    code, out, _ = run(capsys, "extend-check", str(h_file), "--S", "1", "--cycle", cycle)
    check = json.loads(out)["checks"][0]
    assert code == 1 and check["result"] == "NOT-EXTENDABLE"
    code, out, _ = run(capsys, "extend-check", str(h_file), "--S", "1,2", "--cycle", cycle)
    check = json.loads(out)["checks"][0]
    assert code == 0 and sorted(check["witness"]["added"]) == ["c", "d"]


def test_extend_check_all(capsys, tmp_path, h_file):
    k5 = tmp_path / "k5.txt"
    write_edgelist(complete_graph(5), k5)
    code, out, _ = run(capsys, "extend-check", str(k5), "--all")
    assert code == 0 and json.loads(out)["checks"][0]["result"] == "EXTENDABLE_ALL"
    code, out, _ = run(capsys, "extend-check", str(h_file), "--all", "--S", "1")
    check = json.loads(out)["checks"][0]
    assert code == 1 and check["violations"] == 1 and len(check["witness"]["cycles"]) == 1


def test_extend_check_rejects_bad_cycles(capsys, h_file):
    assert run(capsys, "extend-check", str(h_file), "--cycle", "a,v1,v2")[0] == 2
    # a valid spanning cycle has nothing to extend
    full = ",".join(H_HAT_HAMILTONIAN)
    assert run(capsys, "extend-check", str(h_file), "--cycle", full)[0] == 2


def test_search_reports(capsys, tmp_path):
    out_dir = tmp_path / "report"
    code, out, err = run(capsys, "search", "--n", "6:8", "--seed", "3", "--trials", "6",
                         "--filters", "fan4_free,abar_free", "--report-dir", str(out_dir))
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["n"] for r in rows] == [6, 7, 8, 6, 7, 8]
    assert all(r["status"] in ("EXTENDABLE_ALL", "no-sample") for r in rows)
    assert "promised=True" in err
    with open(out_dir / "findings.csv") as fh:
        assert len(list(csv.reader(fh))) == 7
    assert (out_dir / "summary.png").stat().st_size > 1000


def test_search_deterministic(capsys):
    first = run(capsys, "search", "--n", "7", "--seed", "9", "--trials", "3")[1]
    assert run(capsys, "search", "--n", "7", "--seed", "9", "--trials", "3")[1] == first


def test_search_bad_input(capsys):
    assert run(capsys, "search", "--n", "seven")[0] == 2
    assert run(capsys, "search", "--filters", "planar", "--trials", "1")[0] == 2


def test_class_promises_extension():
    assert class_promises_extension({"fan4_free", "abar_free", "strongly_chordal"}, ExtensionSpec(1))
    assert not class_promises_extension({"fan4_free"}, ExtensionSpec(1))
    assert not class_promises_extension({"fan3_free"}, ExtensionSpec(2))


def test_capacity_error_exit_code(capsys, monkeypatch, h_file):
    monkeypatch.setenv("CYCLE_EXT_SUBSET_CAP", "10")
    code, _, err = run(capsys, "extend-check", str(h_file), "--all")
    assert code == 2 and "cap" in err
    # verify falls back to search and skips pancyclicity
    code, out, _ = run(capsys, "verify", str(h_file))
    by_name = {c["name"]: c for c in json.loads(out)["checks"]}
    assert code == 0 and by_name["pancyclic"]["status"] == "SKIP"
    assert by_name["hamiltonian"]["status"] == "PASS"


def test_module_entry_point(h_file):
    proc = subprocess.run([sys.executable, "-m", "cycext", "verify", str(h_file), "--checks",
                           "chordal"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["pass"]
