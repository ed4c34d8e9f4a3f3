import io
import json
import subprocess
import sys

import pytest

from nichekit.cli import run
from nichekit.formats import format_graph, parse_graph, parse_tournament
from nichekit.named import complete_graph, cycle_graph, path_graph
from nichekit.properties import isomorphic

FIG1 = "tournament 3\nparts 2 1 1\na 0 2\na 2 1\na 1 3\na 3 0\na 2 3\n"


def cli(*argv):
    out = io.StringIO()
    code = run([str(a) for a in argv], out=out)
    return code, out.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p
    return _write


def test_niche_text_json_dot(write):
    f = write("fig1.txt", FIG1)
    code, out = cli("niche", f)
    assert code == 0 and out == "graph 4\ne 1 2\ne 1 3\n"
    code, out = cli("niche", f, "--json")
    assert json.loads(out) == {"n": 4, "edges": [[1, 2], [1, 3]]}
    code, out = cli("niche", f, "--dot")
    assert out.startswith("graph G {") and "1 -- 3;" in out


def test_realize_exit_codes(write):
    k4 = write("k4.txt", format_graph(complete_graph(4)))
    assert cli("realize", k4, "--k", 3) == (1, "NO (Theorem 4.1)\n")
    code, out = cli("realize", k4, "--k", 4)
    assert code == 0 and out.startswith("YES (Theorem 4.1)\n")
    W = parse_tournament(out.split("\n", 1)[1])
    assert W.k == 4
    code, out = cli("realize", k4, "--k", 3, "--json")
    assert code == 1 and json.loads(out)["answer"] == "no"


def test_realize_unknown_and_guard_env(write, monkeypatch):
    G = complete_graph(9)
    G = type(G)(9, G.edges - {(0, 1)})
    f = write("g.txt", format_graph(G))
    code, out = cli("realize", f, "--k", 3)
    assert code == 2 and out.startswith("UNKNOWN")
    small = write("p.txt", format_graph(type(G)(5, complete_graph(5).edges - {(0, 1)})))
    monkeypatch.setenv("NICHEKIT_GUARD", "4")
    code, out = cli("realize", small, "--k", 3)
    assert code == 2
    monkeypatch.setenv("NICHEKIT_GUARD", "8")
    code, _ = cli("realize", small, "--k", 3)
    assert code in (0, 1)
    monkeypatch.setenv("NICHEKIT_GUARD", "lots")
    assert cli("realize", small, "--k", 3)[0] == 3


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["niche"],
    ["realize", "x.txt"],
    ["enumerate", "--parts", "3"],
    ["enumerate", "--parts", "a,b"],
    ["verify", "thm9.9"],
    ["spectrum"],
    ["niche", "/nonexistent/file"],
])
def test_input_errors_exit_3(argv):
    assert cli(*argv)[0] == 3


def test_malformed_file_reports_line(write, capsys):
    f = write("bad.txt", "graph 3\ne 0 1\ne 0 9\n")
    code, _ = cli("realize", f, "--k", 3)
    assert code == 3
    assert "line 3" in capsys.readouterr().err


def test_enumerate(write):
    assert cli("enumerate", "--parts", "2,2,2", "--count-only") == (0, "4096\n")
    code, out = cli("enumerate", "--parts", "1,1,1")
    blocks = out.split("\n\n")
    assert code == 0 and len(blocks) == 8
    ts = [parse_tournament(b) for b in blocks]
    assert len({t.arcs for t in ts}) == 8


def test_spectrum_deterministic():
    code, out = cli("spectrum", "--parts", "1,1,1")
    assert code == 0
    assert out == "2\tn=3 edges=-\n6\tn=3 edges=0-2,1-2\n"
    assert cli("spectrum", "--n", 4, "--k", 3) == cli("spectrum", "--parts", "2,1,1")
    code, out = cli("spectrum", "--n", 5, "--k", 3)
    assert sum(int(line.split("\t")[0]) for line in out.splitlines()) == 2 ** 8 + 2 ** 7


def test_verify():
    code, out = cli("verify", "lem4.3", "--max-n", 5)
    assert code == 0 and out.startswith("lem4.3: PASS")
    code, out = cli("verify", "all", "--max-n", 5)
    assert code == 0 and len(out.splitlines()) == 10


def test_shell_round_trip(tmp_path):
    g = tmp_path / "c5.txt"
    g.write_text(format_graph(cycle_graph(5)))
    realize = subprocess.run(
        [sys.executable, "-m", "nichekit", "realize", str(g), "--k", "4"],
        capture_output=True, text=True)
    assert realize.returncode == 0
    w = tmp_path / "w.txt"
    w.write_text(realize.stdout.split("\n", 1)[1])
    niche = subprocess.run(
        [sys.executable, "-m", "nichekit", "niche", str(w)], capture_output=True, text=True)
    assert niche.returncode == 0
    assert isomorphic(parse_graph(niche.stdout), cycle_graph(5)) is not None


def test_shell_no_case():
    r = subprocess.run([sys.executable, "-m", "nichekit", "realize", "-", "--k", "3"],
                       input=format_graph(path_graph(6)), capture_output=True, text=True)
    assert r.returncode == 1 and r.stdout == "NO (Theorem 4.2)\n"
