"""
Shared fixtures: src/ on the import path, seeded generators
"""
import sys
from pathlib import Path

import pytest

_project_root = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(_project_root / "src"))

from utils.sampling import make_rng  # noqa: E402


@pytest.fixture
def rng():
    return make_rng(20240521)


@pytest.fixture
def other_rng():
    return make_rng(77)
