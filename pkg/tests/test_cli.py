from __future__ import annotations

import json

import pytest

from fleischner.cli import main
from fleischner.corpus import named
from fleischner.pmg import emit_pmg, parse_cycle, read_pmg


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def _gen(name, path="g.pmg"):
    assert main(["gen", name, "--out", path]) == 0
    return path


def test_gen_named_and_random(workdir, capsys):
    assert main(["gen", "k4"]) == 0
    assert capsys.readouterr().out == emit_pmg(named("k4"))
    assert main(["gen", "--random", "--n", "12", "--seed", "3", "--multi"]) == 0
    assert capsys.readouterr().out.startswith("pmg 1\n")


def test_construct_then_verify(workdir, capsys):
    g = _gen("tutte")
    code = main(["construct", g, "--out", "j.pmg", "--cycle", "h.cyc", "--report", "r.json", "--x-out", "x.txt"])
    assert code == 0
    rep = json.loads((workdir / "r.json").read_text())
    assert rep["passed"] and rep["edges_j"] == 71
    assert len(parse_cycle((workdir / "h.cyc").read_text())) == 46
    assert read_pmg("j.pmg").n_edges == 71
    assert main(["verify", g, "j.pmg", "h.cyc", "--two-factor", "x.txt"]) == 0
    assert json.loads(capsys.readouterr().out)["passed"]


def test_verify_failure_exit_code(workdir, capsys):
    g = _gen("prism")
    main(["construct", g, "--first-matching", "--out", "j.pmg", "--cycle", "h.cyc", "--x-out", "x.txt"])
    (workdir / "bad.cyc").write_text("cycle 1 2 3 4 5 6\n")
    assert main(["verify", g, "j.pmg", "bad.cyc", "--two-factor", "x.txt"]) == 1
    # the default 2-factor differs from the one used, so the certificate fails
    assert main(["verify", g, "j.pmg", "h.cyc"]) == 1


def test_construct_with_edge_file(workdir, capsys):
    g = _gen("prism")
    (workdir / "x.txt").write_text("1 2 4 7 8 9\n")
    assert main(["construct", g, "--two-factor", "x.txt"]) == 0
    assert json.loads(capsys.readouterr().out)["components_x"] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "missing.pmg"],
        ["gen", "petersen"],
        ["gen", "--random"],
        ["gen", "--random", "--n", "7"],
        ["export", "g.pmg", "--highlight", "q"],
        ["frobnicate"],
        [],
    ],
)
def test_input_errors_exit_2(workdir, argv):
    _gen("k4")
    assert main(argv) == 2


def test_bad_two_factor_file(workdir):
    g = _gen("k4")
    (workdir / "x.txt").write_text("1 2 3\n")
    assert main(["construct", g, "--two-factor", "x.txt"]) == 2


def test_non_class_input(workdir):
    (workdir / "p.pmg").write_text("pmg 1\nvertex 0 darts 1 2\nvertex 1 darts 4 3\nedge 1 1 3\nedge 2 2 4\nouter 1\n")
    assert main(["construct", "p.pmg"]) == 2


def test_oracle_modes(workdir, capsys):
    g = _gen("theta")
    assert main(["oracle", g, "--bonds"]) == 0
    assert capsys.readouterr().out == "1 2 3\n"
    assert main(["oracle", g, "--hamilton"]) == 0
    assert capsys.readouterr().out == "cycle 0 1\n"
    assert main(["oracle", g, "--matchings"]) == 0
    assert capsys.readouterr().out.splitlines() == ["1", "2", "3"]
    assert main(["oracle", _gen("cube", "c.pmg"), "--cross-check"]) == 0
    assert json.loads(capsys.readouterr().out)["passed"]
    assert main(["oracle", _gen("tutte", "t.pmg"), "--bonds"]) == 2


def test_export(workdir, capsys):
    g = _gen("prism")
    assert main(["export", g, "--format", "dot"]) == 0
    assert capsys.readouterr().out.count(" -- ") == 9
    assert main(["export", g, "--format", "svg", "--first-matching", "--highlight", "x,m,chords,h,diamonds", "--out", "p.svg"]) == 0
    assert (workdir / "p.svg").read_text().count('class="edge chord') == 2
    _gen("theta", "t.pmg")
    assert main(["export", "t.pmg", "--format", "svg"]) == 0
    assert "outer face" in capsys.readouterr().err
