import json
import subprocess
import sys

import pytest

from plbkit.cli import main
from plbkit.graph import complete_graph, load_graph, petersen_graph, save_graph


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_writes_edge_list(tmp_path, capsys):
    path = tmp_path / "g.txt"
    code, out, _ = run(["gen", "--model", "chung-lu", "--n", "200", "--beta-prime", "3", "--seed", "4",
                        "--out", str(path)], capsys)
    assert code == 0 and out == ""
    assert load_graph(path).n == 200


def test_gen_json_report(capsys):
    code, out, _ = run(["gen", "--model", "abplg", "--e-alpha", "1000", "--beta", "3", "--json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["n"] == 1194 and doc["schema_version"] == 1 and "edges" in doc


def test_check_solve_exact(tmp_path, capsys):
    path = tmp_path / "p.txt"
    save_graph(petersen_graph(), path)
    _, out, _ = run(["check", "--in", str(path), "--beta", "3", "--c1", "100"], capsys)
    assert json.loads(out)["pass_u"] is True
    _, out, _ = run(["solve", "--problem", "mds", "--in", str(path), "--trace"], capsys)
    doc = json.loads(out)
    assert doc["valid"] and len(doc["trace"]) == doc["size"]
    _, out, _ = run(["exact", "--problem", "mis", "--in", str(path)], capsys)
    assert json.loads(out)["size"] == 4


def test_bound_outputs(capsys):
    _, out, _ = run(["bound", "--which", "a", "--params", "beta=3", "t=1"], capsys)
    doc = json.loads(out)
    assert doc["exact"] == "23/5"
    _, out, _ = run(["bound", "--which", "hardness", "--params", "problem=mvc", "mode=simple", "c2=0.02",
                     "beta=3"], capsys)
    assert abs(json.loads(out)["factor"] - 1.2819860059) < 1e-9
    _, out, _ = run(["bound", "--which", "lemma22", "--params", "a=2", "b=4", "c=2"], capsys)
    assert json.loads(out)["holds"] is True
    _, out, _ = run(["bound", "--which", "pvl", "--params", "g_kind=linear", "c=2", "C=1", "c1=1", "beta=3",
                     "n=100", "M=50"], capsys)
    assert json.loads(out)["exact"] == "355/3"


def test_embed_command(tmp_path, capsys):
    src, dst, rep = tmp_path / "k4.txt", tmp_path / "out.txt", tmp_path / "r.json"
    save_graph(complete_graph(4), src)
    code, _, _ = run(["embed", "--mode", "multi", "--in", str(src), "--beta", "3", "--c2", "0.02",
                      "--out", str(dst), "--report", str(rep)], capsys)
    assert code == 0
    doc = json.loads(rep.read_text())
    assert load_graph(dst).n == doc["N"]


def test_errors_exit_nonzero(tmp_path, capsys):
    src = tmp_path / "k4.txt"
    save_graph(complete_graph(4), src)
    code, _, err = run(["embed", "--mode", "multi", "--in", str(src), "--beta", "3", "--c2", "0.4"], capsys)
    assert code == 1 and "bracket" in err
    code, _, err = run(["exact", "--problem", "mds", "--in", str(tmp_path / "missing.txt")], capsys)
    assert code == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("n 2 m 1\n0 0\n")
    code, _, err = run(["solve", "--problem", "mds", "--in", str(bad)], capsys)
    assert code == 1 and "line 2" in err
    with pytest.raises(SystemExit):
        main(["gen"])


def cli(*args, cwd):
    return subprocess.run([sys.executable, "-m", "plbkit.cli", *args], cwd=cwd, capture_output=True, check=True)


def test_repeated_invocations_are_byte_identical(tmp_path):
    a = cli("gen", "--model", "girg", "--n", "2000", "--beta-prime", "3", "--seed", "9", "--out", "a.txt", cwd=tmp_path)
    b = cli("gen", "--model", "girg", "--n", "2000", "--beta-prime", "3", "--seed", "9", "--out", "b.txt", cwd=tmp_path)
    assert (tmp_path / "a.txt").read_bytes() == (tmp_path / "b.txt").read_bytes()
    args = ("experiment", "--model", "hyperbolic", "--n", "1000", "--alpha-h", "0.75", "--trials", "2")
    assert cli(*args, cwd=tmp_path).stdout == cli(*args, cwd=tmp_path).stdout
