import json
import subprocess
import sys
from pathlib import Path

import pytest

from latval.cli import run

DATA = Path(__file__).resolve().parent.parent / "data"
N = str(DATA / "n_poset.json")
NR = str(DATA / "n_realizer.json")
S3 = str(DATA / "s3.json")

N_TABLE = """\
downset\tantichain\tv\tv'\tomega
\t\t0\t7\t0
b\tb\t1\t6\t1
b,d\td\t2\t5\t3
a\ta\t3\t4\t4
a,b\ta,b\t4\t3\t5
a,b,d\ta,d\t5\t2\t7
a,b,c\tc\t6\t1\t13
a,b,c,d\tc,d\t7\t0\t15
"""


def call(capsys, *argv):
    status = run(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_lattice_stats(capsys):
    assert call(capsys, "lattice", "-i", N, "--stats") == (0, "elements=4 downsets=8 antichains=8\n", "")


def test_lattice_listing(capsys):
    status, out, _ = call(capsys, "lattice", "-i", S3)
    assert status == 0
    assert len(out.splitlines()) == 19


def test_valuate_table(capsys):
    status, out, _ = call(capsys, "valuate", "-i", N, "-r", NR)
    assert status == 0
    assert out == N_TABLE


def test_table_round_trips_through_check(capsys, tmp_path):
    table = tmp_path / "v.tsv"
    assert run(["valuate", "-i", N, "-r", NR, "-o", str(table)]) == 0
    assert table.read_text(encoding="utf-8") == N_TABLE
    status, out, _ = call(capsys, "check", "-i", N, "-v", str(table))
    assert status == 0
    assert out.splitlines()[-1] == "verdict: complete"


def test_dim2(capsys):
    status, out, _ = call(capsys, "dim2", "-i", S3)
    assert (status, out) == (1, "no realizer: dimension ≥ 3\n")
    status, out, _ = call(capsys, "dim2", "-i", N)
    assert status == 0
    assert json.loads(out) == {"lambda1": list("abcd"), "lambda2": list("bdac")}


def test_weights_then_check_and_extract(capsys, tmp_path):
    status, out, _ = call(capsys, "weights", "-i", N, "-r", NR)
    assert json.loads(out) == {"weights": {"a": 3, "b": 1, "c": 2, "d": 1}}
    wfile = tmp_path / "w.json"
    wfile.write_text(out, encoding="utf-8")
    assert call(capsys, "check", "-i", N, "-v", str(wfile))[0] == 0
    status, out, _ = call(capsys, "extract-realizer", "-i", N, "-v", str(wfile))
    assert status == 0
    assert json.loads(out) == json.loads(Path(NR).read_text())
    status, out, _ = call(capsys, "valuate", "-i", N, "-v", str(wfile))
    assert out == N_TABLE


def test_check_verdicts(capsys, tmp_path):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"elements": list("abcd"), "le": [["a", "b"], ["b", "c"]]}))
    w = tmp_path / "w.json"
    w.write_text(json.dumps({"weights": {"a": 1, "b": 3, "c": 1, "d": 2}}))
    status, out, _ = call(capsys, "check", "-i", str(p), "-v", str(w))
    assert status == 1
    assert "witness: lower segment of size 5 closes to values [0, 1, 2, 3, 4, 6]" in out
    assert out.splitlines()[-1] == "verdict: bijective, not complete"
    status, out, _ = call(capsys, "extract-realizer", "-i", str(p), "-v", str(w))
    assert status == 1
    w.write_text(json.dumps({"weights": {"a": 1, "b": 1, "c": 1, "d": 1}}))
    status, out, _ = call(capsys, "check", "-i", str(p), "-v", str(w))
    assert (status, out.splitlines()[-1]) == (1, "verdict: not bijective")


def test_check_non_valuation_table(capsys, tmp_path):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"elements": ["a", "b"], "le": []}))
    t = tmp_path / "t.tsv"
    t.write_text("downset\tantichain\tv\tv'\tomega\n\t\t0\t\t\na\ta\t1\t\t\nb\tb\t1\t\t\na,b\ta,b\t3\t\t\n")
    status, out, _ = call(capsys, "check", "-i", str(p), "-v", str(t))
    assert status == 1
    assert out.splitlines() == ["valuation: additivity fails on ({a}, {b})", "verdict: not a valuation"]


def test_roundtrip_and_search(capsys):
    status, out, _ = call(capsys, "roundtrip", "-i", N)
    assert status == 0
    assert out == "a,b,c,d\tb,d,a,c\ttrue\nb,d,a,c\ta,b,c,d\ttrue\n"
    assert call(capsys, "roundtrip", "-i", N, "-r", NR)[0] == 0
    status, out, _ = call(capsys, "search", "-i", N, "--mode", "complete")
    assert out == "a\tb\tc\td\n1\t2\t1\t3\n3\t1\t2\t1\n# mode=complete candidates=20 found=2\n"
    status, out, _ = call(capsys, "search", "-i", S3, "--mode", "complete")
    assert status == 1
    assert out.endswith("# mode=complete candidates=4368 found=0\n")


def test_export_dot(capsys):
    status, out, _ = call(capsys, "export-dot", "-i", N, "--target", "complement", "-r", NR)
    assert status == 0
    assert '"b" -> "a";' in out and '"d" -> "c";' in out and '"a" -> "c"' not in out
    status, out, _ = call(capsys, "export-dot", "-i", N, "--target", "poset")
    assert out.count("->") == 3
    status, out, _ = call(capsys, "export-dot", "-i", N, "--target", "lattice", "-r", NR)
    assert out.count("->") == 10
    assert 'label="{a,b,c,d} v=7"' in out


@pytest.mark.parametrize("argv", [
    ["lattice", "-i", "/nonexistent.json"],
    ["weights", "-i", N],
    ["nosuchcommand"],
])
def test_input_errors(capsys, argv):
    assert run(argv) == 2


def test_cycle_is_input_error(capsys, tmp_path):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"elements": ["a", "b"], "le": [["a", "b"], ["b", "a"]]}))
    status, _, err = call(capsys, "lattice", "-i", str(p))
    assert status == 2
    assert err.startswith("latval: CycleDetected")


def test_env_limit(capsys, monkeypatch):
    monkeypatch.setenv("LATVAL_LIMIT", "5")
    status, _, err = call(capsys, "lattice", "-i", S3)
    assert status == 2 and "SizeLimitExceeded" in err
    assert call(capsys, "lattice", "-i", S3, "--limit", "100")[0] == 0


def test_module_entry_is_deterministic():
    cmd = [sys.executable, "-m", "latval", "valuate", "-i", N, "-r", NR]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second == N_TABLE.encode("utf-8")
