"""Golden outputs under tests/golden, one JSON file per full command line.

Regenerate after an intended output change with ``UPDATE_GOLDEN=1 pytest tests/test_golden.py``.
"""

import io
import json
import os
import re
from pathlib import Path

import pytest

from pythagorean.cli import run

GOLDEN = Path(__file__).parent / "golden"

COMMANDS = [
    "anth 7/5 1 --json",
    "anth 7/5 1",
    "anth sqrt(2) 1 --json",
    "cf sqrt(2)",
    "cf sqrt(3) --json",
    "cf (1+sqrt(5))/2",
    "cert sqrt(2) 1",
    "cert 6 4 --json",
    "pell --n 8",
    "pell --n 4 --digits 20 --json",
    "elegant sqrt(2) 1",
    "elegant 7 5 --subtractive --json",
    "descent surd --steps 5",
    "descent int 12 17 --json",
    "book2 verify --all",
    "book2 verify II.10 Elegant --json",
    "book2 gnomon --k 4",
    "areas excess 2 1",
    "areas excess 3 4 --json",
    "areas defect 4 3",
    "areas mean-extreme 2",
    "areas mean-proportional 1 2 --json",
    "music --steps 7",
    "music --steps 30 --json",
    "angle classify 1 1",
    "angle classify 2 3 --non-strict --json",
    "angle omega 4",
    "verify-all",
    "cf sqrt(991) --max-steps 3 --json",
    "anth 1 0",
    "anth 1+ 2",
]


def slug(command: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", command).strip("_") + ".json"


def execute(command: str) -> dict:
    argv = command.split()
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return {"argv": argv, "exit_code": code, "stdout": out.getvalue()}


def test_slugs_unique():
    assert len({slug(c) for c in COMMANDS}) == len(COMMANDS)


@pytest.mark.parametrize("command", COMMANDS)
def test_golden(command):
    path = GOLDEN / slug(command)
    got = execute(command)
    if os.environ.get("UPDATE_GOLDEN"):
        GOLDEN.mkdir(exist_ok=True)
        path.write_text(json.dumps(got, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    expected = json.loads(path.read_text(encoding="utf-8"))
    assert got == expected
