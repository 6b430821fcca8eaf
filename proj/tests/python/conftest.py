import json
import os
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def schema():
    return json.loads((ROOT / "docs" / "report.schema.json").read_text())


@pytest.fixture(scope="session")
def cli_binary():
    path = os.environ.get("OUROBOROS_CLI")
    if not path:
        pytest.skip("OUROBOROS_CLI not set")
    return path
