"""Small named set functions shared across the test-suite."""

from __future__ import annotations

import pytest

from polyconn import SetFunction, make_set_function


def table(labels: str, values: list[int | str]) -> SetFunction:
    """Set function on single-character labels, values listed in ascending mask order."""
    return make_set_function(list(labels), dict(enumerate(values)))


@pytest.fixture
def fix_u12() -> SetFunction:
    """Rank of U_{1,2} on {a,b}."""
    return table("ab", [0, 1, 1, 1])


@pytest.fixture
def fix_u23() -> SetFunction:
    """Rank of U_{2,3} on {a,b,c}."""
    return table("abc", [0, 1, 1, 2, 1, 2, 2, 2])


@pytest.fixture
def fix_u13() -> SetFunction:
    return table("abc", [0, 1, 1, 1, 1, 1, 1, 1])


@pytest.fixture
def fix_lu13() -> SetFunction:
    """Connectivity function of U_{1,3}."""
    return table("abc", [0, 1, 1, 1, 1, 1, 1, 0])


@pytest.fixture
def fix_coloop() -> SetFunction:
    return table("a", [0, 1])


@pytest.fixture
def fix_loop() -> SetFunction:
    return table("a", [0, 0])


@pytest.fixture
def fix_not_submodular() -> SetFunction:
    """Increasing and normalised, but f({a}) + f({b}) < f({a,b}) + f({})."""
    return table("ab", [0, 1, 1, 3])


@pytest.fixture
def fix_disconnected() -> SetFunction:
    """Connectivity function of U_{1,2} ⊕ U_{1,1}: c is a coloop."""
    return table("abc", [0, 1, 1, 0, 0, 1, 1, 0])
