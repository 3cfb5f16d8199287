"""Pytest configuration and fixtures."""

from collections.abc import Iterator

import pytest

from mec.config import get_settings
from mec.core.models import InstanceSet


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Isolate tests from MEC_* variables and the settings cache."""
    for key in ("MEC_LOG_LEVEL", "MEC_SEED", "MEC_WORKERS", "MEC_DP_MAX_VERTICES"):
        monkeypatch.delenv(key, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def w_instance() -> InstanceSet:
    """The two three-state distributions used throughout the worked examples."""
    return InstanceSet.from_lists([[0.5, 0.4, 0.1], [0.6, 0.2, 0.2]])


@pytest.fixture
def meet_over_profile() -> InstanceSet:
    """Pair on which the profile bound is weaker than the meet."""
    return InstanceSet.from_lists([[0.5, 0.5], [0.75] + [0.05] * 5])


@pytest.fixture
def uniform_pair() -> InstanceSet:
    return InstanceSet.from_lists([[1 / 2] * 2, [1 / 3] * 3])


@pytest.fixture
def write_instance(tmp_path):
    """Write an instance JSON file and return its path."""
    import json

    def _write(distributions, name: str = "instance.json", **extra):
        path = tmp_path / name
        path.write_text(json.dumps({"distributions": distributions, **extra}))
        return path

    return _write
