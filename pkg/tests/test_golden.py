"""Output schemas frozen by the files under tests/golden/."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from gravicol.cli import cli
from gravicol.output.emit import read_csv

GOLDEN = Path(__file__).with_name("golden")
DOCUMENT = json.loads((GOLDEN / "document.json").read_text(encoding="utf-8"))
COMMANDS = sorted(p for p in GOLDEN.glob("*.json") if p.name != "document.json")


def run(args, tmp_path, fmt="json"):
    path = tmp_path / f"out.{fmt}"
    result = CliRunner().invoke(cli, [*args, "--format", fmt, "--output", str(path)])
    assert result.exit_code == 0, result.output
    return path.read_text(encoding="utf-8")


@pytest.mark.parametrize("golden", COMMANDS, ids=lambda p: p.stem)
def test_json_schema(golden, tmp_path):
    schema = json.loads(golden.read_text(encoding="utf-8"))
    doc = json.loads(run(schema["args"], tmp_path))

    assert list(doc) == DOCUMENT["keys"]
    assert doc["command"] == golden.stem
    assert list(doc["units"]) == DOCUMENT["units"]
    assert list(doc["settings"]) == DOCUMENT["settings"]
    assert list(doc["results"]) == schema["results"]
    assert list(doc["oracle_deltas"]) == schema["oracles"]
    for delta in doc["oracle_deltas"].values():
        assert list(delta) == DOCUMENT["oracle_delta"]


@pytest.mark.parametrize(
    "golden",
    [p for p in COMMANDS if "csv_columns" in json.loads(p.read_text(encoding="utf-8"))],
    ids=lambda p: p.stem,
)
def test_csv_columns(golden, tmp_path):
    schema = json.loads(golden.read_text(encoding="utf-8"))
    header, *rows = read_csv(run(schema["args"], tmp_path, fmt="csv"))
    assert header == schema["csv_columns"]
    assert rows
    assert all(len(row) == len(header) for row in rows)
