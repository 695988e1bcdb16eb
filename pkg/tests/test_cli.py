"""Tests for the weavekit command line."""

import json
import shutil
import tempfile
from pathlib import Path

import pytest

from weavekit import cli


def test_enumerate_a3(capsys):
    assert cli.run(["enumerate", "--type", "A3"]) == 0
    out = capsys.readouterr().out
    assert "seeds: 14" in out
    assert "variables: 9" in out


def test_enumerate_json(capsys):
    assert cli.run(["enumerate", "--type", "B2", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["seeds"] == 6
    assert payload["variables"] == 6


def test_enumerate_dot(capsys):
    assert cli.run(["enumerate", "--tripod", "2", "2", "2", "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph exchange {")
    assert out.count(" -- ") == 50 * 4 // 2


def test_cap_exceeded_exit_code(capsys):
    assert cli.run(["enumerate", "--tripod", "3", "3", "3", "--cap", "100"]) == 4
    assert "Fix:" in capsys.readouterr().err


def test_bad_type_exit_code(capsys):
    assert cli.run(["enumerate", "--type", "Q7"]) == 1
    assert "ERROR" in capsys.readouterr().err


def test_walk_a2_returns(capsys):
    assert cli.run(["walk", "--type", "A2", "--seq", "1,2,1,2,1", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["distinct"] == 5
    assert payload["returned"] is True
    assert len(payload["steps"]) == 6


def test_walk_linear_coxeter(capsys):
    assert cli.run(["walk", "--linear", "2", "--coxeter", "5", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["returned"] is True
    assert "ngraph" in payload["steps"][1]


def test_verify_folding(capsys):
    assert cli.run(["verify", "folding"]) == 0
    out = capsys.readouterr().out
    assert "PASS | folding/d4-g2-matrix" in out
    assert "SUMMARY" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    from weavekit import core

    monkeypatch.setattr(core, "D4_TO_G2", ((0, 3), (-1, 0)))
    assert cli.run(["verify", "folding"]) == 2
    assert "FAIL | folding/d4-g2-matrix" in capsys.readouterr().out


def test_ngraph_quiver(capsys):
    assert cli.run(["ngraph", "quiver", "linear", "3", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["type"] == "quiver"
    assert payload["data"]["n"] == 3


def test_ngraph_check_admissible(capsys):
    assert cli.run(["ngraph", "check-admissible", "linear", "3", "--setting", "A2n-1"]) == 0
    assert "A2n-1: admissible" in capsys.readouterr().out
    assert cli.run(["ngraph", "check-admissible", "linear", "2", "--setting", "A2n-1"]) == 2


def test_ngraph_pictures_need_out(capsys):
    assert cli.run(["ngraph", "build", "tripod", "1", "1", "1", "--format", "svg"]) == 1
    assert "--out" in capsys.readouterr().err


def test_ngraph_build_writes_files():
    temp_dir = Path(tempfile.mkdtemp())
    try:
        svg = temp_dir / "g.svg"
        assert cli.run(["ngraph", "build", "tripod", "1", "1", "1", "--format", "svg", "--out", str(svg)]) == 0
        assert svg.exists()
        dot = temp_dir / "g.dot"
        assert cli.run(["ngraph", "mutate", "linear", "3", "--k", "2", "--format", "dot", "--out", str(dot)]) == 0
        assert dot.read_text(encoding="utf-8").startswith("graph ngraph {")
    finally:
        shutil.rmtree(temp_dir)


def test_flags_check_equivariance(capsys):
    assert cli.run(["flags", "check-equivariance", "linear", "3", "--seed", "4"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS | cycle") == 3


def test_flags_interior_face_is_unsupported(capsys):
    assert cli.run(["flags", "solve", "theta"]) == 3


def test_bad_cap(capsys):
    assert cli.run(["enumerate", "--type", "A2", "--cap", "0"]) == 1
    assert "cap must be at least 1" in capsys.readouterr().err


def test_unknown_suite_is_rejected_by_the_parser():
    with pytest.raises(SystemExit):
        cli.run(["verify", "nothing"])
