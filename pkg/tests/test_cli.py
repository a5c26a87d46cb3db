import json
import subprocess
import sys

import pytest

from orthogonal_ordinals.cli import run
from orthogonal_ordinals.checks import SUITES, run_suite


def call(capsys, *argv):
    code = run(list(argv))
    return code, capsys.readouterr().out


def test_decide_text(capsys):
    assert call(capsys, "decide", "--alpha", "w", "--beta", "w^w") == (0, "NotOrthogonal (ωβ = β)\n")
    assert call(capsys, "decide", "--alpha", "3", "--beta", "3") == (0, "NotOrthogonal (finite oracle)\n")
    code, out = call(capsys, "decide", "--alpha", "w+1", "--beta", "w^w*7+w")
    assert out.startswith("Orthogonal")


def test_decide_json(capsys):
    code, out = call(capsys, "decide", "--alpha", "w", "--beta", "w+1", "--json")
    data = json.loads(out)
    assert data == {"alpha": "w", "beta": "w+1", "verdict": "Orthogonal",
                    "reason": "alpha-omega-beta-lt-omega-beta"}


def test_count_simple(capsys):
    code, out = call(capsys, "count-simple", "--n", "4", "--ratio")
    assert code == 0
    assert out.startswith("q(4)=2, ratio=0.0833, e^-2=0.1353")
    code, out = call(capsys, "count-simple", "--n", "6", "--json")
    assert json.loads(out) == {"n": 6, "q": 46}


def test_witness_roundtrip_to_dot(capsys, tmp_path):
    out_json = tmp_path / "w.json"
    code, out = call(capsys, "witness", "--alpha", "w", "--beta", "w", "--truncate", "12",
                     "--verify", "--out", str(out_json))
    assert code == 0
    assert "trace: omega-omega-fence(0)" in out and "verification: ok" in out
    data = json.loads(out_json.read_text())
    assert len(data["elements"]) == 12 and data["verification"]["ok"]
    dot = tmp_path / "w.dot"
    code, out = call(capsys, "export-dot", "--in", str(out_json), "--out", str(dot))
    assert code == 0 and dot.read_text().startswith("digraph")


def test_witness_not_orthogonal_exits_one(capsys):
    code, out = call(capsys, "witness", "--alpha", "w", "--beta", "w^w")
    assert code == 1 and "NotOrthogonal" in out


def test_export_dot_structure(capsys, tmp_path):
    src = tmp_path / "g.json"
    src.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2]]}))
    dot = tmp_path / "g.dot"
    assert call(capsys, "export-dot", "--in", str(src), "--out", str(dot))[0] == 0
    assert "0 -- 1;" in dot.read_text()


def test_sturmian(capsys):
    assert call(capsys, "sturmian", "--slope", "sqrt2-1", "--n", "7") == (0, "0101001\n")
    code, out = call(capsys, "sturmian", "--slope", "(sqrt5-1)/2", "--n", "0")
    assert out == "\n"


def test_check_suite(capsys):
    code, out = call(capsys, "check", "--suite", "finite-equiv", "--max-n", "4")
    assert code == 0 and out.startswith("finite-equiv: pass")


@pytest.mark.parametrize("argv", [
    ["decide", "--alpha", "w^^", "--beta", "1"],
    ["decide", "--alpha", "w"],
    ["count-simple", "--n", "-1"],
    ["count-simple", "--n", "12"],
    ["witness", "--alpha", "w", "--beta", "w", "--truncate", "0"],
    ["check", "--suite", "nope"],
    ["sturmian", "--slope", "3", "--n", "5"],
    ["sturmian", "--slope", "sqrt", "--n", "5"],
    ["export-dot", "--in", "/nonexistent.json", "--out", "/tmp/x.dot"],
    [],
])
def test_usage_errors_exit_two(argv, capsys):
    with pytest.raises(SystemExit) as e:
        run(argv)
    assert e.value.code == 2


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "orthogonal_ordinals.cli", "witness", "--alpha", "w+1",
           "--beta", "w^w", "--truncate", "15", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["alpha"] == "w+1"


@pytest.mark.parametrize("name,max_n", [
    ("finite-equiv", 5), ("zaguia", 5), ("gallai", 5), ("bichain-vs-intersection", 4),
    ("dual-orientations", 4), ("fact", 500), ("sturmian", 300), ("ga-prime", 10)])
def test_suites_pass_at_small_size(name, max_n):
    assert name in SUITES
    res = run_suite(name, max_n)
    assert res.ok and res.checked > 0, res.failures
