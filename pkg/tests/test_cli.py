import json
import subprocess
import sys

import pytest

from rootposets.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "C2")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "{}" and lines[-1] == "count: 6"


def test_enumerate_filters(capsys):
    for filt, n in [("short", 4), ("strictly_s_positive", 2), ("long", 4), ("strictly_positive", 5)]:
        code, out, _ = run(capsys, "enumerate", "G2", "--filter", filt)
        assert code == 0 and out.splitlines()[-1] == f"count: {n}"


def test_enumerate_json_to_file(tmp_path, capsys):
    path = tmp_path / "out.json"
    assert run(capsys, "enumerate", "F4", "--filter", "short", "--format", "json", "--output", str(path))[0] == 0
    doc = json.loads(path.read_text())
    assert doc["count"] == 21 == len(doc["antichains"])


def test_charpoly(capsys):
    code, out, _ = run(capsys, "charpoly", "C2", "shi-s", "2")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "(t-5)^2; regions=36 bounded=16"
    assert lines[2] == "conjecture: (t-5)^2 verdict=equal"
    code, out, _ = run(capsys, "charpoly", "G2", "--kind", "cat", "--m", "1", "--format", "json")
    doc = json.loads(out)
    assert doc["factored"] == "(t-7)(t-11)" and doc["regions"] == 12 * 8


def test_usage_errors(capsys):
    assert run(capsys, "enumerate", "A3", "--filter", "short")[0] == 2
    assert run(capsys, "enumerate", "Q7")[0] == 2
    assert run(capsys, "charpoly", "C2", "linial")[0] == 2
    assert run(capsys, "charpoly", "C2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["--seed-free", "enumerate", "C2"])
    assert exc.value.code == 2


def test_resource_guards(capsys):
    assert run(capsys, "charpoly", "E6", "cat", "1")[0] == 3
    assert run(capsys, "charpoly", "C2", "cat", "9")[0] == 3


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--systems", "B3,C3", "--scope", "duality", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["summary"]["fail"] == 0 and doc["summary"]["pass"] > 0


def test_verify_budget(capsys):
    code, _, _ = run(capsys, "verify", "--systems", "C2", "--scope", "all", "--time-budget", "0")
    assert code == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rootposets", "enumerate", "C2", "--filter", "short"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.splitlines()[-1] == "count: 3"
