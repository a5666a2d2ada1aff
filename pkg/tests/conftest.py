from __future__ import annotations

import os
from pathlib import Path

import pytest

from selbergdim import cli

GOLDEN_DIR = Path(__file__).parent / "golden"
DATA_DIR = Path(__file__).parent / "data"

# One row per committed CLI fixture: (fixture file, argv, expected exit code).
# test_cli checks them one by one; the acceptance suite runs the whole list.
GOLDEN_CASES: list[tuple[str, tuple[str, ...], int]] = [
    ("dims_4_5_3.json", ("dims", "-m", "4", "-n", "5", "-r", "3", "--format", "json"), 0),
    ("dims_2_4_4.txt", ("dims", "-m", "2", "-n", "4", "-r", "4"), 0),
    ("dims_2_4_4.csv", ("dims", "-m", "2", "-n", "4", "-r", "4", "--format", "csv"), 0),
    (
        "table_m2-4_n4-6_only_n.csv",
        ("table", "--m-range", "2..4", "--n-range", "4..6", "--r-policy", "only-n",
         "--format", "csv"),
        0,
    ),
    (
        "table_m2_n4_all.txt",
        ("table", "--m-range", "2..2", "--n-range", "4..4", "--format", "pretty"),
        0,
    ),
    (
        "table_m2_n4_all.json",
        ("table", "--m-range", "2..2", "--n-range", "4..4", "--format", "json"),
        0,
    ),
    ("classify_resonant.txt", ("classify", str(DATA_DIR / "config_resonant.json")), 0),
    (
        "classify_resonant.json",
        ("classify", str(DATA_DIR / "config_resonant.json"), "--format", "json"),
        0,
    ),
    (
        "classify_resonant.csv",
        ("classify", str(DATA_DIR / "config_resonant.json"), "--format", "csv"),
        0,
    ),
    ("classify_violation.txt", ("classify", str(DATA_DIR / "config_violation.json")), 3),
    (
        "classify_violation.json",
        ("classify", str(DATA_DIR / "config_violation.json"), "--format", "json"),
        3,
    ),
    ("classify_m1.json", ("classify", str(DATA_DIR / "config_m1.json"), "--format", "json"), 0),
    ("verify_hockey.txt", ("verify", "hockey"), 0),
    (
        "verify_pfaff_seed7.json",
        ("verify", "pfaff", "--seed", "7", "--cases", "500", "--format", "json"),
        0,
    ),
    ("verify_all.csv", ("verify", "all", "--format", "csv"), 0),
]


@pytest.fixture
def run_cli(capsys):
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""

    def runner(*argv: str) -> tuple[int, str, str]:
        try:
            code = cli.main(list(argv))
        except SystemExit as exc:
            code = exc.code if isinstance(exc.code, int) else 1
        out, err = capsys.readouterr()
        return code, out, err

    return runner


def compare_golden(name: str, actual: str) -> None:
    """Byte-compare against a committed fixture; UPDATE_GOLDENS=1 rewrites it."""
    path = GOLDEN_DIR / name
    if os.environ.get("UPDATE_GOLDENS") == "1":
        path.write_text(actual, encoding="utf-8")
    expected = path.read_text(encoding="utf-8")
    assert actual == expected, f"output differs from committed fixture {name}"
