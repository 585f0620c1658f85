import json
import subprocess
import sys

import pytest

from colorful_polytopes import families as fam
from colorful_polytopes.cli import main
from colorful_polytopes.exchange import build_colorful_exchange_graph
from builders import k4_graph


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_colorful_associahedron_3(capsys):
    code, out, _ = run(["verify", "--family", "colorful_associahedron", "-n", "3"], capsys)
    assert code == 0
    assert "vertices: expected 84, computed 84: pass" in out
    assert "edges: expected 126, computed 126: pass" in out
    assert "chromatic index = degree: expected 3, computed 3: pass" in out
    assert "|automorphism group|: expected 72, computed 72: pass" in out
    assert "genus: expected 4, computed 4: pass" in out
    lines = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert all(l.endswith(": pass") for l in lines)


def test_build_polytope_f_vector(capsys):
    code, out, _ = run(["build-polytope", "-n", "3"], capsys)
    assert code == 0 and "f-vector: 84 126 36 1" in out


def test_verify_hexagon(capsys):
    code, out, _ = run(["verify", "--family", "colorful_cyclohedron", "-n", "1"], capsys)
    assert code == 0 and "|automorphism group|: expected 12, computed 12: pass" in out


def test_bad_coloring_exits_2(tmp_path, capsys):
    data = build_colorful_exchange_graph(2).to_json()
    data["edge_color"][1] = data["edge_color"][0]
    path = tmp_path / "bad_coloring.json"
    path.write_text(json.dumps(data))
    code, out, err = run(["build", "--from-file", str(path)], capsys)
    assert code == 2 and "proper coloring violated at vertex" in err and out == ""


def test_unreadable_and_out_of_range(tmp_path, capsys):
    bad = tmp_path / "x.json"
    bad.write_text("{not json")
    assert run(["build", "--from-file", str(bad)], capsys)[0] == 2
    assert run(["build", "--from-file", str(tmp_path / "missing.json")], capsys)[0] == 2
    assert run(["verify", "-n", "5"], capsys)[0] == 2
    assert run(["build", "--family", "colorful_cyclohedron", "-n", "4"], capsys)[0] == 2
    assert run(["quotient", "--family", "associahedron", "-n", "2"], capsys)[0] == 2
    assert run(["surface", "-n", "2"], capsys)[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["explode"])
    assert exc.value.code == 2


def test_from_file_round_trip(tmp_path, capsys):
    path = tmp_path / "k4.json"
    path.write_text(json.dumps(k4_graph().to_json()))
    code, out, _ = run(["verify", "--from-file", str(path)], capsys)
    assert code == 0 and "euler" not in out
    code, out, _ = run(["surface", "--from-file", str(path), "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["crosscaps"] == 1


def test_failed_check_exits_1_with_witness(monkeypatch, capsys):
    monkeypatch.setattr(fam, "predicted_group_order", lambda family, n: 999)
    code, out, _ = run(["verify-group", "--family", "colorful_associahedron", "-n", "2"], capsys)
    assert code == 1 and "expected 999, computed 20: fail" in out


def test_outputs_and_formats(tmp_path, capsys):
    code, out, _ = run(["build", "-n", "2", "--format", "dot"], capsys)
    assert code == 0 and out.startswith("graph G {") and 'color="0"' in out
    code, out, _ = run(["build", "-n", "2", "--format", "json"], capsys)
    assert len(json.loads(out)["vertices"]) == 10
    code, out, _ = run(["build-polytope", "-n", "2", "--format", "csv"], capsys)
    assert out.splitlines() == ["rank,f0,f1,f2,flags", "2,10,10,1,20"]
    code, out, _ = run(["aut", "-n", "2", "--mode", "preserving", "--format", "json"], capsys)
    assert json.loads(out)["order"] == 10
    target = tmp_path / "report.json"
    code, out, _ = run(["surface", "--family", "colorful_cyclohedron", "-n", "2", "--format", "json", "--out", str(target)], capsys)
    assert code == 0 and out == "" and json.loads(target.read_text())["genus"] == 1


@pytest.mark.parametrize(
    "args",
    [
        ["quotient", "-n", "3"],
        ["check-iso", "-n", "3"],
        ["check-covering", "--family", "colorful_cyclohedron", "-n", "2"],
        ["check-axioms", "--family", "colorful_cyclohedron", "-n", "2"],
        ["verify-group", "--family", "cyclohedron", "-n", "3"],
        ["facet-stats", "-n", "3"],
        ["facet-stats", "--family", "colorful_cyclohedron", "-n", "2"],
        ["report", "--kind", "surfaces"],
        ["report", "--kind", "K_table", "-n", "3"],
    ],
)
def test_verbs_pass(args, capsys):
    code, out, _ = run(args, capsys)
    assert code == 0, out
    assert "fail" not in out and "mismatch" not in out


def test_check_iso_witness_json(capsys):
    code, out, _ = run(["check-iso", "-n", "2", "--format", "json"], capsys)
    data = json.loads(out)
    assert data["isomorphic"] and len(data["witness"]) == 12  # pentagon: 5 + 5 + 1 + bottom


def test_report_counts_rows(capsys):
    code, out, _ = run(["report", "--kind", "counts", "--format", "json"], capsys)
    rows = json.loads(out)["rows"]
    row = next(r for r in rows if r["family"] == "colorful_associahedron" and r["n"] == 3)
    assert (row["predicted"], row["computed"], row["match"]) == (84, 84, "match")
    assert code == 0


def test_sampled_verify_is_deterministic(capsys, monkeypatch):
    args = ["check-axioms", "--family", "colorful_associahedron", "-n", "4", "--seed", "7", "--format", "json"]
    first = run(args, capsys)
    monkeypatch.setenv("COLORFUL_POLYTOPES_THREADS", "4")
    second = run(args, capsys)
    assert first == second and first[0] == 0


def test_threaded_report_matches_serial(capsys, monkeypatch):
    serial = run(["report", "--kind", "groups", "--format", "csv"], capsys)
    monkeypatch.setenv("COLORFUL_POLYTOPES_THREADS", "3")
    threaded = run(["report", "--kind", "groups", "--format", "csv"], capsys)
    assert serial == threaded and serial[0] == 0


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "colorful_polytopes", "build", "-n", "1"], capture_output=True, text=True)
    assert res.returncode == 0 and "vertices: 2" in res.stdout
