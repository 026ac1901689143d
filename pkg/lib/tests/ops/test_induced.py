from fractions import Fraction

import pytest
from tests.fixtures.setfn_fixtures import table

from polyconn import (
    PreconditionError,
    canonical_self_dual,
    classify,
    connectivity_of,
    dual,
    induced_polymatroid,
    scale,
)


def test_induced_values(fix_lu13):
    assert induced_polymatroid(fix_lu13) == table("abc", [0, 2, 2, 3, 2, 3, 3, 3])


def test_induced_is_compact_and_self_dual(fix_lu13):
    induced = induced_polymatroid(fix_lu13)
    facts = classify(induced)
    assert facts.is_polymatroid
    assert facts.is_compact
    assert dual(induced) == induced
    assert connectivity_of(induced) == scale(fix_lu13, 2)


def test_half_realises_connectivity(fix_lu13):
    half = canonical_self_dual(fix_lu13)
    assert half(["a"]) == 1
    assert half(["a", "b"]) == Fraction(3, 2)
    assert connectivity_of(half) == fix_lu13
    assert classify(half).is_half_integral


def test_disconnected_connectivity_function(fix_disconnected):
    half = canonical_self_dual(fix_disconnected)
    assert connectivity_of(half) == fix_disconnected
    assert dual(half) == half


def test_refuses_non_symmetric(fix_u23):
    with pytest.raises(PreconditionError) as info:
        induced_polymatroid(fix_u23)
    assert info.value.report.check == "symmetric"


def test_enforce_false(fix_u12):
    assert canonical_self_dual(fix_u12, enforce=False)(["a", "b"]) == Fraction(3, 2)
