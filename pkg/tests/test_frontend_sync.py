"""The editor bundles offline copies of the examples; keep them in sync."""

import json
from pathlib import Path

import pytest

from minicalc.fixtures import FIXTURES

FALLBACK = Path(__file__).parent.parent / "frontend" / "src" / "examples-fallback.json"


@pytest.mark.skipif(not FALLBACK.exists(), reason="frontend not built in this checkout")
def test_bundled_fallback_examples_match_the_package():
    payload = json.loads(FALLBACK.read_text(encoding="utf-8"))
    bundled = {e["name"]: e for e in payload["examples"]}
    assert set(bundled) == {f.name for f in FIXTURES}
    for fixture in FIXTURES:
        entry = bundled[fixture.name]
        assert entry["source"] == fixture.source
        assert entry["title"] == fixture.title
        assert entry["description"] == fixture.description
