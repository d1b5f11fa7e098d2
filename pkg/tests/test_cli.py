import json
import subprocess
import sys

import pytest

from surfcoh.cli import main, parse_range


def test_parse_range():
    assert parse_range("2..4") == (2, 4)
    assert parse_range("3") == (3, 3)


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["verify", "--suite", "bogus"],
        ["verify", "--g", "x..y"],
        ["verify", "--g", "2..9"],
        ["verify", "--n", "4..2"],
        ["verify", "--samples", "0"],
        ["verify", "--relation-sign", "both"],
        ["table", "--g", "2..9"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2


def test_passing_suite_exits_0(capsys):
    assert main(["verify", "--suite", "cover", "--g", "2", "--n", "1"]) == 0
    out = capsys.readouterr().out
    assert "PASS  cover/euler/g2/n1" in out


def test_failing_check_exits_1(capsys):
    assert main(["verify", "--suite", "johnson", "--g", "3"]) == 1
    assert "FAIL  johnson/tau-b1-a1a2/g3" in capsys.readouterr().out


def test_json_to_file(tmp_path):
    out = tmp_path / "report.json"
    rc = main(["verify", "--suite", "push", "--g", "2", "--n", "1..2", "--format", "json", "--out", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["summary"]["pass"] is True
    assert doc["config"]["suite"] == "push"


def test_table(capsys):
    assert main(["table", "--g", "2", "--n", "2..3"]) == 0
    out = capsys.readouterr().out
    assert "17 / 17" in out and "48 / 48" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "surfcoh", "verify", "--suite", "cover", "--g", "2", "--n", "2", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["summary"]["total"] == 2
