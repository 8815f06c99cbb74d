"""CLI behavior: commands, formats, exit codes, output hygiene."""

import json
import re
import subprocess
import sys

import pytest

from e8nogo.cli import main

FLOAT_TOKEN = re.compile(r"\d\.\d")


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_roots_e8(capsys):
    code, out, _ = run_cli(capsys, "roots", "E8")
    assert code == 0
    assert out.strip() == "240 roots, 120 positive, h∨=30"


def test_roots_a1(capsys):
    code, out, _ = run_cli(capsys, "roots", "A1")
    assert code == 0
    assert out.startswith("2 roots, 1 positive")


def test_roots_bad_type(capsys):
    code, _, err = run_cli(capsys, "roots", "Z9")
    assert code == 2
    assert "Z9" in err


def test_roots_list_renders_positive_roots(capsys):
    code, out, _ = run_cli(capsys, "roots", "B2", "--list")
    assert code == 0
    assert out.splitlines()[1:] == ["0 1", "1 0", "1 1", "1 2"]


def test_roots_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "roots", "E8")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"type": "E8", "roots": 240, "positive": 120, "dual_coxeter": 30}


def test_sl2_e8(capsys):
    code, out, _ = run_cli(capsys, "sl2", "E8", "--max-index", "2")
    assert code == 0
    assert "2 sl2 classes" in out
    assert "index 1:" in out and "index 2:" in out


def test_sl2_e8_max1(capsys):
    code, out, _ = run_cli(capsys, "sl2", "E8", "--max-index", "1")
    assert code == 0
    assert "1 sl2 classes" in out


def test_sl2_b6(capsys):
    code, out, _ = run_cli(capsys, "sl2", "B6", "--max-index", "2")
    assert code == 0
    assert out.count("index 2:") == 2


def test_sl2_json(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "sl2", "E8")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["classes"]) == 2


def test_decompose_22_layout(capsys):
    code, out, _ = run_cli(
        capsys, "decompose", "--h1", "4,5,7,10,8,6,4,2", "--h2", "0,-2,-1,-2,-1,0,0,0"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[1].split()[1:] == ["20", "20", "6"]
    assert lines[2].split()[1:] == ["20", "16", "4"]
    assert lines[3].split()[1:] == ["6", "4", "0"]


def test_decompose_12_layout(capsys):
    code, out, _ = run_cli(
        capsys, "decompose", "--h1", "0,-1,0,0,0,0,0,0", "--h2", "4,5,7,10,8,6,4,2"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[1].split()[1:] == ["39", "18", "1"]
    assert lines[2].split()[1:] == ["32", "16", "0"]
    assert lines[3].split()[1:] == ["10", "2", "0"]


def test_decompose_refine(capsys):
    code, out, _ = run_cli(
        capsys,
        "decompose",
        "--h1", "4,5,7,10,8,6,4,2",
        "--h2", "0,-2,-1,-2,-1,0,0,0",
        "--refine",
    )
    assert code == 0
    assert "centralizer: C2xC2" in out
    assert "V_{2,1} = 5⊗4" in out
    assert "V_{2,2} = 4⊗4" in out
    assert "V_{2,3} = 1⊗4" in out


def test_decompose_json_round_trip(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "json", "decompose", "--h1", "2,3,4,6,5,4,3,2"
    )
    assert code == 0
    doc = json.loads(out)
    dims = {(m, n): d for m, n, d in doc["dims"]}
    assert dims == {(1, 1): 133, (2, 1): 56, (3, 1): 1}


def test_decompose_bad_vector(capsys):
    code, _, err = run_cli(capsys, "decompose", "--h1", "1,2,three")
    assert code == 2


def test_decompose_wrong_length(capsys):
    code, _, err = run_cli(capsys, "decompose", "--h1", "1,2,3")
    assert code == 2


def test_centralizer_command(capsys):
    code, out, _ = run_cli(capsys, "centralizer", "--h1", "2,3,4,6,5,4,3,2")
    assert code == 0
    assert "dim 133, type E7" in out


def test_centralizer_pair_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "--format", "json",
        "centralizer",
        "--h1", "2,3,4,6,5,4,3,2",
        "--h2", "2,2,3,4,3,2,1,0",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 66
    assert doc["type"] == "D6"


def test_reality_command(capsys):
    code, out, _ = run_cli(capsys, "reality", "B5", "0,0,0,0,1")
    assert code == 0
    assert "dim 32, Quaternionic" in out


def test_reality_product(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "reality", "A1xB4", "1,0,0,0,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == 32
    assert doc["reality"] == "Quaternionic"


def test_reality_bad_weight(capsys):
    code, _, _ = run_cli(capsys, "reality", "B5", "1,2")
    assert code == 2


def test_nogo_dim(capsys):
    code, out, _ = run_cli(capsys, "nogo-dim")
    assert code == 0
    assert "180" in out and "128" in out
    assert "excluded by counting" in out


def test_toe_text_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "toe", "--mode", "toe2")
    assert code == 0
    assert "6/6 candidates fail ToE3" in out


def test_toe_prime_text(capsys):
    code, out, _ = run_cli(capsys, "toe", "--mode", "toe2prime")
    assert code == 0
    assert "9/9 candidates fail ToE3" in out


def test_toe_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "toe", "--mode", "toe2prime")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_toe3_fail"] is True
    assert len(doc["candidates"]) == 9
    assert json.loads(json.dumps(doc)) == doc


def test_toe_bad_mode_exits_2():
    proc = subprocess.run(
        [sys.executable, "-m", "e8nogo.cli", "toe", "--mode", "bogus"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2


def test_no_floating_point_tokens_anywhere(capsys):
    for argv in (
        ["roots", "E8"],
        ["sl2", "E8"],
        ["decompose", "--h1", "4,5,7,10,8,6,4,2", "--h2", "0,-2,-1,-2,-1,0,0,0", "--refine"],
        ["nogo-dim"],
        ["toe", "--mode", "toe2prime"],
        ["--format", "json", "toe", "--mode", "toe2"],
    ):
        code, out, _ = run_cli(capsys, *argv)
        assert code == 0
        assert not FLOAT_TOKEN.search(out), argv


def test_seed_flag_accepted(capsys):
    code, out, _ = run_cli(capsys, "--seed", "7", "sl2", "E8", "--max-index", "1")
    assert code == 0
    assert "1 sl2 classes" in out
