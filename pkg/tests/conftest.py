import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make tests/oracles.py importable

from singwf import load_records

TABLES_DIR = Path(__file__).resolve().parent.parent / "tables"


@pytest.fixture(scope="session")
def corpus():
    """All shipped dataset records."""
    return load_records(TABLES_DIR)
