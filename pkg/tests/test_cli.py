"""Tests for the command-line interface: output formats, guards, exit codes."""

import csv
import io
import json
import subprocess
import sys

import pytest

from dyckmax.cli import FIELDS_TABLE, main
from dyckmax.exact import catalan

STRICT_10 = "1 2 6 19 63 216 758 2705 9777 35698"
WEAK_10 = "1 3 9 29 98 341 1210 4356 15860 58276"


def run_cli(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


# ---------- series ----------

def test_series_strict_plain(capsys):
    code, out, _ = run_cli(capsys, "series", "--kind", "strict", "--order", "10")
    assert code == 0
    assert out == STRICT_10 + "\n"


def test_series_weak_plain(capsys):
    code, out, _ = run_cli(capsys, "series", "--kind", "weak", "--order", "10")
    assert code == 0
    assert out == WEAK_10 + "\n"


def test_series_json_matches_plain(capsys):
    code, out, _ = run_cli(
        capsys, "series", "--kind", "strict", "--order", "10", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "strict"
    assert [r["n"] for r in doc["records"]] == list(range(1, 11))
    assert [r["coefficient"] for r in doc["records"]] == STRICT_10.split()


def test_series_csv_matches_plain(capsys):
    code, out, _ = run_cli(
        capsys, "series", "--kind", "weak", "--order", "10", "--format", "csv"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "coefficient"]
    assert [r[1] for r in rows[1:]] == WEAK_10.split()


def test_series_routes_agree(capsys):
    for kind in ("strict", "weak"):
        _, via_exact, _ = run_cli(capsys, "series", "--kind", kind, "--order", "50")
        _, via_genfun, _ = run_cli(
            capsys, "series", "--kind", kind, "--order", "50", "--via", "genfun"
        )
        assert via_exact == via_genfun


def test_series_order_bounds(capsys):
    for bad in ("0", "501", "-3"):
        code, _, err = run_cli(capsys, "series", "--kind", "strict", "--order", bad)
        assert code == 2
        assert "--order" in err


def test_series_rejects_unknown_kind(capsys):
    code, _, err = run_cli(capsys, "series", "--kind", "bogus", "--order", "5")
    assert code == 2
    assert "invalid choice" in err


# ---------- table ----------

def test_table_first_row(capsys):
    code, out, _ = run_cli(capsys, "table", "--n-max", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == " ".join(FIELDS_TABLE)
    assert lines[1] == "1 1 1 1 1.000000 1.000000 0.703315 2.540807"


def test_table_row_200(capsys):
    code, out, _ = run_cli(capsys, "table", "--n-max", "200")
    assert code == 0
    last = out.splitlines()[-1].split()
    assert last[0] == "200"
    assert last[1] == str(catalan(200))
    assert last[4:] == ["11.050254", "20.368224", "11.025650", "20.536318"]


def test_table_json_and_csv_agree(capsys):
    _, plain, _ = run_cli(capsys, "table", "--n-max", "6")
    _, as_json, _ = run_cli(capsys, "table", "--n-max", "6", "--format", "json")
    _, as_csv, _ = run_cli(capsys, "table", "--n-max", "6", "--format", "csv")
    doc = json.loads(as_json)
    assert doc["kind"] == "table"
    csv_rows = list(csv.reader(io.StringIO(as_csv)))
    assert csv_rows[0] == list(FIELDS_TABLE)
    plain_rows = [line.split() for line in plain.splitlines()[1:]]
    for rec, crow, prow in zip(doc["records"], csv_rows[1:], plain_rows):
        assert list(rec) == list(FIELDS_TABLE)
        assert [str(rec[f]) for f in FIELDS_TABLE] == crow == prow


def test_table_guards(capsys, monkeypatch):
    monkeypatch.delenv("DYCKMAX_MAX_N", raising=False)
    code, _, err = run_cli(capsys, "table", "--n-max", "10001")
    assert code == 2 and "guard" in err
    code, _, _ = run_cli(capsys, "table", "--n-max", "0")
    assert code == 2
    monkeypatch.setenv("DYCKMAX_MAX_N", "2")
    code, _, _ = run_cli(capsys, "table", "--n-max", "3")
    assert code == 2
    monkeypatch.setenv("DYCKMAX_MAX_N", "20")
    code, out, _ = run_cli(capsys, "table", "--n-max", "15")
    assert code == 0
    assert len(out.splitlines()) == 16


# ---------- paths ----------

def test_paths_summary(capsys):
    code, out, _ = run_cli(capsys, "paths", "--n", "4")
    assert code == 0
    assert out == "n=4 paths=14 strict=19 weak=29\n"


def test_paths_list_smallest(capsys):
    code, out, _ = run_cli(capsys, "paths", "--n", "1", "--list")
    assert code == 0
    assert out == "ud h=1 strict=1 weak=1\n"


def test_paths_list_semi_length_7(capsys):
    code, out, _ = run_cli(capsys, "paths", "--n", "7", "--list")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == catalan(7)
    assert "uuduuddudduudd h=3 strict=2 weak=2" in lines


def test_paths_guards(capsys, monkeypatch):
    monkeypatch.delenv("DYCKMAX_MAX_N", raising=False)
    code, _, err = run_cli(capsys, "paths", "--n", "15", "--list")
    assert code == 2 and "--list" in err
    code, _, _ = run_cli(capsys, "paths", "--n", "-1")
    assert code == 2
    monkeypatch.setenv("DYCKMAX_MAX_N", "3")
    code, _, err = run_cli(capsys, "paths", "--n", "4")
    assert code == 2


# ---------- verify ----------

def test_verify_passes(capsys):
    code, out, _ = run_cli(capsys, "verify")
    assert code == 0
    lines = out.splitlines()
    assert sum(1 for line in lines if line.startswith("PASS ")) == 8
    assert not any(line.startswith("FAIL") for line in lines)
    assert lines[-1] == "verification OK"


def test_verify_reports_injected_fault(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify",
        "--n-max-oracle", "6",
        "--order", "20",
        "--inject-fault", "divisor-sieve",
    )
    assert code == 1
    lines = out.splitlines()
    assert any(line.startswith("FAIL divisor-identity:") for line in lines)
    assert lines[-1] == "verification FAILED"


def test_verify_argument_guards(capsys, monkeypatch):
    monkeypatch.delenv("DYCKMAX_MAX_N", raising=False)
    code, _, _ = run_cli(capsys, "verify", "--n-max-oracle", "15")
    assert code == 2
    code, _, _ = run_cli(capsys, "verify", "--order", "11")
    assert code == 2


# ---------- top-level wiring ----------

def test_missing_subcommand(capsys):
    code, _, err = run_cli(capsys)
    assert code == 2
    assert "command" in err


def test_module_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "dyckmax", "series", "--kind", "strict", "--order", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 2 6 19 63"
