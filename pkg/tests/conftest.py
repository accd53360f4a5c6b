import os

import pytest

# Opt-in members of the acceptance suite that need minutes of CPU rather
# than seconds.  Everything required for a green run stays unconditional.
stretch = pytest.mark.skipif(
    not os.environ.get("BENZEL_STRETCH"),
    reason="stretch check; set BENZEL_STRETCH=1 to run",
)


@pytest.fixture()
def cache_path(tmp_path, monkeypatch):
    """An isolated cache file, also exported through the environment so CLI
    invocations in the same process pick it up."""
    path = tmp_path / "cache.jsonl"
    monkeypatch.setenv("BENZEL_CACHE", str(path))
    return path
