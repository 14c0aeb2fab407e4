import json
import subprocess
import sys
from pathlib import Path

import pytest

from torsionlab.cli import main, parse_window, UsageError

ROOT = Path(__file__).resolve().parents[1]
FIXTURE = str(ROOT / "fixtures" / "nonwpr.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list(capsys):
    code, out, _ = run(capsys, "list", "--json")
    assert code == 0
    ids = [c["check_id"] for c in json.loads(out)["checks"]]
    assert "2.110+2.120" in ids and "3.x" in ids


def test_verify_alias_json(capsys):
    code, out, _ = run(capsys, "verify", "2.120", "--bound", "12", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["checks"][0]["check_id"] == "2.110+2.120" and doc["checks"][0]["status"] == "pass"


def test_wpr_fixture(capsys):
    code, out, _ = run(capsys, "wpr", "--ring", FIXTURE, "--seq", "x", "--bounds", "4", "8")
    assert out.splitlines()[0] == "NotProZeroUpTo(8)"
    assert code == 2


def test_wpr_fixture_json(capsys):
    code, out, _ = run(capsys, "wpr", "--ring", FIXTURE, "--seq", "x", "--bounds", "4", "8", "--json")
    res = json.loads(out)["result"]
    assert res["verdict"] == "NotProZeroUpTo(8)" and res["witness"]["v"] == 8


def test_wpr_regular(capsys, tmp_path):
    desc = tmp_path / "plane.json"
    desc.write_text(json.dumps({"family": "polynomial", "params": {"variables": ["x", "y"]}}))
    code, out, _ = run(capsys, "wpr", "--ring", str(desc), "--seq", "x,y", "--bounds", "2", "4", "--window", "4")
    assert code == 0 and out.startswith("ProZeroCertified")


def test_cohomology_and_koszul(capsys, tmp_path):
    desc = tmp_path / "line.json"
    desc.write_text(json.dumps({"family": "polynomial", "params": {"variables": ["x"]}}))
    code, out, _ = run(capsys, "cohomology", "--ring", str(desc), "--seq", "x", "--i", "1", "--window=-3:1",
                       "--json")
    res = json.loads(out)["result"]
    assert code == 0 and res["verdict"] == "stabilized"
    assert [p["dim"] for p in res["pieces"]] == [1, 1, 1, 0, 0]
    code, out, _ = run(capsys, "koszul", "--ring", str(desc), "--seq", "x", "--i", "0", "--window", "3", "--json")
    assert code == 0 and json.loads(out)["pieces"] == [{"degree": [0], "dim": 1}]


@pytest.mark.parametrize("argv", [["frobnicate"], ["verify", "9.99"], ["wpr"], ["verify", "--bound", "x"],
                                  ["wpr", "--ring", FIXTURE, "--seq", "z"],
                                  ["cohomology", "--ring", FIXTURE, "--window", "5:1"]])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 3 and "error" in err


def test_descriptor_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "wpr", "--ring", str(bad))[0] == 3
    bad.write_text(json.dumps({"family": "ST", "params": {"p": 3}}))
    code, _, err = run(capsys, "koszul", "--ring", str(bad))
    assert code == 3 and "descriptor" in err


def test_parse_window():
    assert parse_window("4", 1) == (-4, 4)
    assert parse_window("-2:3", 1) == (-2, 3)
    assert parse_window(None, 2) == (-2, 2)
    with pytest.raises(UsageError):
        parse_window("a:b", 1)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "torsionlab", "list"], capture_output=True, text=True)
    assert proc.returncode == 0 and "1.200A" in proc.stdout
