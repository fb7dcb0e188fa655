import csv
import io
import json
import subprocess
import sys

import pytest

from glchars.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "--p", "3", "--f", "1", "--r", "2", "--format", "json")
    assert code == 0
    info = json.loads(out)
    assert (info["group_order"], info["class_count"], info["strongly_primitive"]) == (3888, 78, 54)


def test_info_odd_level_is_counting_only(capsys):
    code, out, _ = run(capsys, "info", "--r", "3", "--format", "json")
    assert code == 0 and "family_counts" not in json.loads(out)


def test_table_csv_shape(capsys):
    code, out, _ = run(capsys, "table", "--p", "3", "--f", "1", "--r", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 55 and all(len(r) == 79 for r in rows)
    assert rows[0][0] == "irrep" and rows[0][1] == "I[1]"
    assert rows[1][1] == "12"


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["m"] == 72
    assert len(data["table"]) == 54 and len(data["classes"]) == 78


def test_classes_and_irreps(capsys):
    code, out, _ = run(capsys, "classes")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and len(rows) == 79
    assert sum(int(r[3]) for r in rows[1:]) == 3888
    code, out, _ = run(capsys, "irreps", "--format", "json")
    data = json.loads(out)
    assert data["counts"]["NPS"] == {"enumerated": 18, "formula": 18}


def test_sums(capsys):
    code, out, _ = run(capsys, "sums", "T", "--k", "2", "--b", "1", "--format", "json")
    assert code == 0 and json.loads(out)["equal"] is True
    code, out, _ = run(capsys, "sums", "chi2", "--r", "4", "--i", "2", "--j", "0", "--kk", "2", "--format", "json")
    assert code == 0 and json.loads(out)["equal"] is True
    code, out, _ = run(capsys, "sums", "gauss", "--k", "2")
    assert code == 0 and out.splitlines()[1].split(",")[3] == "3"


@pytest.mark.parametrize("argv", [["info", "--p", "2"], ["info", "--p", "9"], ["table", "--r", "3"],
                                  ["bogus"], ["info", "--char-kind", "x"], ["sums", "T", "--eta", "1"]])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_budget_error(capsys):
    assert main(["classes", "--p", "5", "--budget", "1000"]) == 3


def test_verify_fast(capsys):
    code, out, _ = run(capsys, "verify", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    assert {c["criterion"] for c in data["criteria"]} == {1, 2, 3, 4, 5, 6, 7}


def test_byte_determinism_across_processes():
    cmd = [sys.executable, "-m", "glchars", "table", "--p", "3", "--f", "1", "--r", "2", "--format", "csv"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and len(a) > 1000
