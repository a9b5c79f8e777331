import json

import pytest

from signedhodge.cli import run
from signedhodge.hodge import HodgeReport, verify_main_theorem
from signedhodge.signed_graph import parse_graph

EXAMPLE = "vertices 3\nedge + 1 2\nedge - 1 2\nedge - 2 3\nhalfedge 1\n"


@pytest.fixture
def write(tmp_path):
    def _write(text, name="g.sg"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def test_chroma(write, capsys):
    assert run(["chroma", write(EXAMPLE)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "λ^3 - 4λ^2 + 5λ - 2"
    assert out[1] == "c = (2, 5, 4)"


def test_verify_example(write, capsys):
    assert run(["verify", write(EXAMPLE)]) == 0
    out = capsys.readouterr().out
    assert "verdict: PASS c = (2, 5, 4) = hodge dims (2, 5, 4)" in out


def test_verify_edgeless(write, capsys):
    assert run(["verify", write("vertices 2\n")]) == 2
    assert "Δ_G is undefined" in capsys.readouterr().err


def test_parse_error(write, capsys):
    assert run(["chroma", write("vertices 2\nedge + 1 1\n")]) == 2
    assert "line 2" in capsys.readouterr().err


def test_missing_file(capsys):
    assert run(["chroma", "/nonexistent/graph.sg"]) == 2


def test_usage_error(capsys):
    assert run(["frobnicate"]) == 2
    assert run([]) == 2


def test_size_guard(write, capsys):
    path = write("vertices 5\nhalfedge 1\n")
    assert run(["verify", path]) == 2
    assert "--allow-large" in capsys.readouterr().err


def test_complex_and_hodge(write, capsys):
    path = write(EXAMPLE)
    assert run(["complex", path]) == 0
    assert "(1, 22, 32)" in capsys.readouterr().out
    assert run(["hodge", "--json", path]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"homology": [0, 0, 11], "hodge_euler": [2, 5, 4], "hodge_kernel": [2, 5, 4]}


def test_verify_json_roundtrip(write, capsys):
    path = write(EXAMPLE)
    assert run(["verify", "--json", path]) == 0
    data = json.loads(capsys.readouterr().out)
    g = parse_graph(EXAMPLE)
    rep = HodgeReport.from_json(g, data)
    assert rep.to_json() == data
    direct = verify_main_theorem(g).to_json()
    for key in ("chromatic", "c", "homology", "hodge_euler", "hodge_kernel", "verdict"):
        assert data[key] == direct[key]


def test_corpus_deterministic(capsys):
    assert run(["corpus", "--n", "3", "--count", "4", "--seed", "11", "--json"]) == 0
    first = capsys.readouterr().out
    assert run(["corpus", "--n", "3", "--count", "4", "--seed", "11", "--json"]) == 0
    assert capsys.readouterr().out == first
    data = json.loads(first)
    assert [item["index"] for item in data["items"]] == [0, 1, 2, 3]
    assert data["passed"] is True


def test_corpus_parallel_matches_serial(capsys):
    args = ["corpus", "--n", "2", "--count", "3", "--seed", "5", "--json"]
    assert run(args) == 0
    serial = capsys.readouterr().out
    assert run(args + ["--jobs", "2"]) == 0
    assert capsys.readouterr().out == serial


def test_corpus_bad_args(capsys):
    assert run(["corpus", "--n", "0", "--count", "1"]) == 2
