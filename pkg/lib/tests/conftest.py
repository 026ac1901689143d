"""Shared test fixtures and imports for all test modules."""

from __future__ import annotations

from collections.abc import Callable, Iterator

import pytest

from polyconn.config import get_settings

# Import all fixtures from tests/fixtures/ directory
# Pytest will automatically make these available to all tests
from tests.fixtures.cli_fixtures import *  # noqa: F403
from tests.fixtures.graph_fixtures import *  # noqa: F403
from tests.fixtures.setfn_fixtures import *  # noqa: F403


@pytest.fixture(autouse=True)
def fresh_settings() -> Iterator[None]:
    """Settings are cached per process; re-read them around every test."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def set_env(monkeypatch: pytest.MonkeyPatch) -> Callable[[str, str], None]:
    """Set a POLYCONN_* variable and drop the cached settings so it takes effect."""

    def _set(name: str, value: str) -> None:
        monkeypatch.setenv(name, value)
        get_settings.cache_clear()

    return _set


@pytest.fixture
def without_pandas(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Mock context that prevents pandas from being imported.

    Clears sys.modules["pandas"] so the import hook is actually triggered
    even if pandas was already imported in this process.
    """
    import builtins
    import sys
    from unittest.mock import patch

    monkeypatch.delitem(sys.modules, "pandas", raising=False)

    original_import = builtins.__import__

    def mock_import(name, *args, **kwargs):  # type: ignore[no-untyped-def]
        if name == "pandas":
            raise ImportError("No module named 'pandas'")
        return original_import(name, *args, **kwargs)

    with patch("builtins.__import__", side_effect=mock_import):
        yield
