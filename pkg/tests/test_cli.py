"""Command line interface: subcommands, formats, and exit codes."""

import json

import pytest

from tubings.cli import main
from tubings.graphs import graph_to_json, parse_graph_json, complete_graph


@pytest.fixture
def p3(tmp_path):
    f = tmp_path / "p3.json"
    f.write_text('{"n": 3, "edges": [[0, 1], [1, 2]]}')
    return str(f)


@pytest.fixture
def k4(tmp_path):
    f = tmp_path / "k4.json"
    f.write_text(graph_to_json(complete_graph(4)))
    return str(f)


def test_tubes_lists_every_tube(p3, capsys):
    assert main(["tubes", p3]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert json.loads(lines[0]) == [0]
    assert len(lines) == 6


def test_diameter_of_the_permutahedron(k4, capsys):
    assert main(["diameter", k4]) == 0
    assert capsys.readouterr().out.strip() == "6"


def test_flipgraph_summary_and_json(p3, capsys):
    assert main(["flipgraph", p3]) == 0
    out = capsys.readouterr().out
    assert "vertices 5" in out and "edges 5" in out
    assert main(["flipgraph", p3, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["vertices"]) == 5 and len(data["edges"]) == 5


def test_flipgraph_dot(p3, capsys):
    assert main(["flipgraph", p3, "--dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph") and out.count("--") == 5


def test_distance_and_geodesics(p3, tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text('[[0], [0, 1]]')
    b.write_text('[[2], [1, 2]]')
    assert main(["distance", p3, "--from", str(a), "--to", str(b)]) == 0
    d = int(capsys.readouterr().out)
    assert d == 2
    assert main(["geodesics", p3, "--from", str(a), "--to", str(b)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert not data["truncated"]
    assert all(len(p) == d + 1 for p in data["paths"])


def test_hamiltonian_verified_pentagon(p3, capsys):
    assert main(["hamiltonian", p3, "--verify"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 5
    assert all(len(json.loads(l)) == 2 for l in lines)


def test_hamiltonian_with_forced_flips(k4, tmp_path, capsys):
    fa = tmp_path / "fa.json"
    fb = tmp_path / "fb.json"
    fa.write_text('[[0, 1], [0, 1, 2]]')
    fb.write_text('[[1, 2, 3], [2, 3]]')
    assert main(["hamiltonian", k4, "--force", str(fa), str(fb),
                 "--verify"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 24


def test_hamiltonian_rejects_a_long_flip(k4, tmp_path, capsys):
    fa = tmp_path / "fa.json"
    fb = tmp_path / "fb.json"
    fa.write_text('[[0], [0, 1]]')
    fb.write_text('[[1, 2, 3], [2, 3]]')
    assert main(["hamiltonian", k4, "--force", str(fa), str(fb)]) == 1


def test_verify_suites(k4, p3, capsys):
    for check in ("bounds", "monotone", "sigma", "regular", "snlfp"):
        assert main(["verify", check, k4]) == 0, check
    capsys.readouterr()
    assert main(["verify", "bounds", "--max-n", "4"]) == 0
    assert "9 graphs" in capsys.readouterr().out


def test_family_output_parses_back(capsys):
    assert main(["family", "cycle", "--n", "5"]) == 0
    g = parse_graph_json(capsys.readouterr().out)
    assert g.n == 5 and len(g.edges) == 5
    assert main(["family", "star", "--n", "4"]) == 0
    g = parse_graph_json(capsys.readouterr().out)
    assert g.n == 4 and g.degree(0) == 3
    assert main(["family", "tk", "--k", "1"]) == 0
    assert parse_graph_json(capsys.readouterr().out).n == 4


def test_experiment_csv(tmp_path):
    out = tmp_path / "tk.csv"
    assert main(["experiment", "tk-diameter", "--max-k", "1",
                 "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "k,n_vertices,flip_vertices,diameter,seconds"
    assert lines[1].startswith("1,4,16,4,")


def test_input_errors_exit_with_two(tmp_path, capsys):
    assert main(["diameter", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "edges": [[0, 5]]}')
    assert main(["diameter", str(bad)]) == 2
    assert main(["family", "tk", "--n", "4"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_identical_invocations_are_deterministic(k4, capsys):
    main(["hamiltonian", k4])
    first = capsys.readouterr().out
    main(["hamiltonian", k4])
    assert capsys.readouterr().out == first
