import json
import subprocess
import sys

from stablecohom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_betti_expand(capsys):
    code, out, _ = run(capsys, "betti", "--degree", "3", "--n", "2", "--expand", "8")
    assert code == 0
    assert out.splitlines()[0] == "[1,1,2,1,1]"
    assert "1 + t^2 + 2*t^4 + t^6 + t^8" in out


def test_betti_json(capsys):
    code, out, _ = run(capsys, "betti", "--degree", "2", "--n", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["checks"]["palindromic"] is True


def test_ring_json(capsys):
    code, out, _ = run(capsys, "ring", "--degree", "2", "--n", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["matches_betti"] is True
    assert len(data["relations"]) == 3
    assert data["picard_group"]["status"] == "stated, not verified"


def test_ring_infinite(capsys):
    code, out, _ = run(capsys, "ring", "--degree", "3", "--infinite")
    assert code == 0 and "a*u" in out


def test_verify_all(capsys, tmp_path):
    dest = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--suite", "all", "--n-max", "4", "--format", "json",
                       "--out", str(dest))
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True and all(c["pass"] for c in data["cases"])
    assert json.loads(dest.read_text()) == data


def test_usage_errors(capsys):
    assert run(capsys, "betti", "--degree", "5", "--n", "2")[0] == 2
    assert run(capsys, "betti", "--degree", "2", "--n", "1")[0] == 2
    assert run(capsys, "betti", "--degree", "2", "--n", "3", "--expand", "3")[0] == 2
    assert run(capsys, "ring", "--degree", "3", "--n", "4")[0] == 2
    assert run(capsys, "ring", "--degree", "2", "--infinite")[0] == 2
    assert run(capsys, "verify", "--n-max", "1")[0] == 2
    assert run(capsys)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stablecohom", "betti", "--degree", "2",
                           "--n", "2", "--expand", "4"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("[1,1,1]")
