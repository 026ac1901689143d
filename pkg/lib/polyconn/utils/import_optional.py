"""Lazy imports of the optional extras."""

from __future__ import annotations

from typing import Any

from polyconn.exceptions import DependencyNotInstalledError


def import_pandas() -> Any:
    """Return the pandas module, used for DataFrame battery reports.

    Raises:
        DependencyNotInstalledError: pandas is not installed; names the ``dataframe`` extra.
    """
    try:
        import pandas
    except ImportError:
        raise DependencyNotInstalledError("pandas", "dataframe") from None
    return pandas


__all__ = ["import_pandas"]
