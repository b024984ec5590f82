from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from minicalc.fixtures import FIXTURES


@pytest.fixture(scope="session")
def fixture_sources() -> dict[str, str]:
    return {f.name: f.source for f in FIXTURES}
