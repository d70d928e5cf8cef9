import io
import json
import subprocess
import sys

import pytest

from corpus import S1
from nutkit.cli import SCHEMA_VERSION, analysis_record, main
from nutkit.enumeration import enumerate_graphs
from nutkit.families import rose_window
from nutkit.graph import parse_graph6, write_graph6
from nutkit.symmetry import is_vertex_transitive


def run(argv, stdin="", monkeypatch=None):
    out = io.StringIO()
    if monkeypatch is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, out)
    return code, out.getvalue()


def lines(text):
    return [ln for ln in text.splitlines() if ln]


def test_generate_and_analyze(monkeypatch):
    code, g6 = run(["generate", "rose-window", "5", "1", "2"])
    assert code == 0
    code, out = run(["analyze"], g6, monkeypatch)
    assert code == 0
    rec = json.loads(out)
    assert rec["is_nut"] and rec["omega"][:2] == [2, 3]
    assert rec["schema_version"] == SCHEMA_VERSION
    assert rec["graph6"] == g6.strip()


def test_analysis_record_keys():
    rec = analysis_record(S1)
    assert set(rec) == {"schema_version", "graph6", "order", "size", "degree", "connected", "bipartite",
                        "nullity", "is_nut", "is_core", "omega", "kernel_vector", "vertex_orbits",
                        "edge_orbits", "orbit_degrees"}
    assert rec["degree"] == {"min": 2, "avg": 16 / 7, "max": 4}
    assert rec["omega"] == [4, 5, 4] and rec["nullity"] == 1
    assert sum(e["size"] for e in rec["edge_orbits"]) == 8
    assert all(e["like"] + e["unlike"] == e["size"] for e in rec["edge_orbits"])


def test_analyze_pretty(monkeypatch):
    code, out = run(["analyze", "--pretty"], "Bw\nF@U^w\n", monkeypatch)
    assert code == 0
    rows = lines(out)
    assert rows[0].startswith("graph6") and len(rows) == 3
    assert "(3, 4, 6)" in rows[2]


def test_analyze_file_and_jobs(tmp_path):
    path = tmp_path / "in.g6"
    path.write_text(">>graph6<<\n" + "\n".join(["Bw", "F@U^w", "F@]~_", "GzK[]K"]) + "\n\n")
    code1, serial = run(["analyze", str(path)])
    code2, parallel = run(["analyze", str(path), "--jobs", "2"])
    assert code1 == code2 == 0
    assert serial == parallel and len(lines(serial)) == 4


def test_jobs_env(monkeypatch, tmp_path):
    path = tmp_path / "in.g6"
    path.write_text("Bw\n")
    monkeypatch.setenv("NUTKIT_JOBS", "x")
    assert run(["analyze", str(path)])[0] == 2
    monkeypatch.setenv("NUTKIT_JOBS", "2")
    assert run(["analyze", str(path)])[0] == 0


def test_malformed_input(monkeypatch, capsys):
    code, _ = run(["analyze"], "Bw\nB!\nCr\n", monkeypatch)
    assert code == 1
    assert "line 2" in capsys.readouterr().err
    code, out = run(["analyze", "--lenient"], "Bw\nB!\nBw\n", monkeypatch)
    assert code == 0 and len(lines(out)) == 2
    assert "skipping line 2" in capsys.readouterr().err


def test_usage_errors(monkeypatch):
    assert run(["frobnicate"])[0] == 2
    assert run(["generate", "nosuch", "3"])[0] == 2
    assert run(["generate", "cycle"])[0] == 2
    assert run(["generate", "cycle", "x"])[0] == 2
    assert run(["generate", "cycle", "2"])[0] == 2
    assert run(["generate", "grr12", "3"])[0] == 2
    assert run(["enumerate", "-n", "9"])[0] == 2
    assert run(["filter"], "Bw\n", monkeypatch)[0] == 2
    assert run(["stats", "--group-by", "colour"], "Bw\n", monkeypatch)[0] == 2
    assert run(["analyze", "/nonexistent/file"])[0] == 2
    assert run(["verify", "circulant-dihedral", "2"])[0] == 2
    assert run(["construct", "multiplier"], "Bw\n", monkeypatch)[0] == 2


@pytest.mark.parametrize("argv, expect", [
    (["generate", "circulant", "12", "1", "5"], lambda g: g.order == 12 and g.size == 24),
    (["generate", "antiprism", "4"], lambda g: write_graph6(g) == b"GzK[]K"),
    (["generate", "c3-cart-cycle", "4"], lambda g: g.order == 12),
    (["generate", "c3-twist-cycle", "6"], lambda g: g.order == 18),
    (["generate", "triangle-cycle", "5"], lambda g: g.order == 15),
    (["generate", "hypercube", "3"], lambda g: g.order == 8),
    (["generate", "complete-bipartite", "3"], lambda g: g.size == 9),
    (["generate", "two-orbit-nut", "25"], lambda g: g.order == 25),
    (["generate", "tetracirculant16"], lambda g: g.order == 16),
])
def test_generate_families(argv, expect):
    code, out = run(argv)
    assert code == 0 and expect(parse_graph6(out.strip()))


def test_construct(monkeypatch):
    code, out = run(["construct", "multiplier", "3"], "Bw\n", monkeypatch)
    assert code == 0 and parse_graph6(out.strip()).order == 9
    code, out = run(["construct", "coalesce", "0"], "@\n", monkeypatch)
    assert code == 0 and parse_graph6(out.strip()).order == 7
    code, out = run(["construct", "fowler", "2"], "GCZLrs\n", monkeypatch)
    assert code == 0 and parse_graph6(out.strip()).order == 14
    code, out = run(["construct", "subdivide", "3", "4"], write_graph6(_t3()).decode() + "\n", monkeypatch)
    assert code == 0 and parse_graph6(out.strip()).order == 21
    code, out = run(["construct", "bridge", "0", "7"], "He?`TOL\n", monkeypatch)
    assert code == 0 and parse_graph6(out.strip()).order == 11


def _t3():
    from nutkit.families import triangle_cycle
    return triangle_cycle(3)


def test_construct_failures(monkeypatch, capsys):
    assert run(["construct", "two-orbit-nut", "7"])[0] == 1
    assert "prime" in capsys.readouterr().err
    code, out = run(["construct", "multiplier", "3"], "Bw\nCF\n", monkeypatch)
    assert code == 1 and len(lines(out)) == 1
    assert "NotRegular" in capsys.readouterr().err
    code, _ = run(["construct", "fowler", "0"], "Dhc\n", monkeypatch)
    assert code == 1


def test_filter(monkeypatch):
    stream = "\n".join(["Bw", "F@U^w", "F@]~_", "GzK[]K", "Ch"]) + "\n"
    code, out = run(["filter", "--nut"], stream, monkeypatch)
    assert code == 0 and lines(out) == ["F@U^w", "F@]~_", "GzK[]K"]
    code, out = run(["filter", "--nut", "--vt"], stream, monkeypatch)
    assert lines(out) == ["GzK[]K"]
    core = write_graph6(rose_window(6, 1, 2)).decode()
    code, out = run(["filter", "--core"], "Ch\n" + core + "\n", monkeypatch)
    assert lines(out) == [core]


def test_enumerate_and_stats(monkeypatch):
    code, out = run(["enumerate", "-n", "7", "--nut"])
    assert code == 0 and len(lines(out)) == 3
    code, csv_text = run(["stats", "--group-by", "ov,oe"], out, monkeypatch)
    rows = lines(csv_text)
    assert rows[0] == "o_v,o_e,count"
    assert sorted(rows[1:]) == ["3,4,1", "4,5,1", "4,6,1"]
    assert sum(int(r.rsplit(",", 1)[1]) for r in rows[1:]) == 3


def test_enumerate_counts():
    assert len(lines(run(["enumerate", "-n", "5"])[1])) == 21


def test_verify_suites(monkeypatch):
    code, out = run(["verify", "circulant-dihedral", "2", "5", "12"])
    assert code == 0 and json.loads(out)["status"] == "pass"
    code, out = run(["verify", "prime-exclusion", "7"])
    assert code == 0
    code, out = run(["verify", "two-orbit-existence", "9", "20"])
    assert code == 0
    code, out = run(["verify", "orbit-inequality"], "F@U^w\nEhEG\n", monkeypatch)
    statuses = [json.loads(ln)["status"] for ln in lines(out)]
    assert code == 0 and statuses == ["pass", "not-applicable"]
    code, out = run(["verify", "construction-delta", "fowler", "2"], "GCZLrs\n", monkeypatch)
    rep = json.loads(out)
    assert code == 0 and rep["witness"]["phi"] == 5
    code, out = run(["verify", "multiplier-symmetry", "3"], "Bw\n", monkeypatch)
    assert code == 0 and json.loads(out)["status"] == "pass"
    code, out = run(["verify", "vt-nut"], "F@U^w\n", monkeypatch)
    assert code == 0 and json.loads(out)["status"] == "not-applicable"


def test_verify_failure_exit_code(monkeypatch):
    import nutkit.verify as v
    monkeypatch.setattr(v, "check_orbit_inequality",
                        lambda g: v.VerificationReport("x", "y", v.FAIL, {"graph6": "y"}))
    code, out = run(["verify", "orbit-inequality"], "Bw\n", monkeypatch)
    assert code == 1 and json.loads(out)["status"] == "fail"


def test_outputs_are_deterministic(monkeypatch):
    stream = "\n".join(["F@U^w", "GzK[]K", "GCZLrs"]) + "\n"
    first = run(["analyze"], stream, monkeypatch)[1]
    second = run(["analyze"], stream, monkeypatch)[1]
    assert first == second
    assert run(["enumerate", "-n", "6"])[1] == run(["enumerate", "-n", "6"])[1]


def test_vertex_transitive_census_from_enumeration(tmp_path, monkeypatch):
    # order-8 vertex-transitive census built locally: 14 graphs, 10 connected, 1 nut
    census = tmp_path / "vt8.g6"
    census.write_text("".join(write_graph6(g).decode() + "\n"
                              for g in enumerate_graphs(8) if is_vertex_transitive(g)))
    code, out = run(["stats", str(census), "--group-by", "connected,nut"])
    assert code == 0
    rows = {tuple(r.split(",")[:2]): int(r.split(",")[2]) for r in lines(out)[1:]}
    assert sum(rows.values()) == 14
    assert rows[("1", "0")] + rows[("1", "1")] == 10
    assert rows[("1", "1")] == 1


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nutkit.cli", "generate", "cycle", "5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "Dhc\n"
    proc = subprocess.run([sys.executable, "-m", "nutkit.cli", "analyze"], input="B!\n",
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 1 and "line 1" in proc.stderr
    proc = subprocess.run([sys.executable, "-m", "nutkit.cli"], capture_output=True, text=True, check=False)
    assert proc.returncode == 2
