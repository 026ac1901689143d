from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError
from tests.fixtures.setfn_fixtures import table

from polyconn import CheckReport, DomainError, Witness, classify, evaluate
from polyconn.constructors import random_set_function
from polyconn.core import (
    check_connected,
    check_half_integral,
    check_increasing,
    check_increasing_naive,
    check_integer_valued,
    check_k_polymatroid,
    check_normalised,
    check_submodular_fast,
    check_submodular_naive,
    check_symmetric,
    check_unitary,
    connectivity_report,
    polymatroid_report,
)
from polyconn.core.checks import check_bounded_by_norm, check_bounded_increments, check_equal
from polyconn.ops import scale


class TestNormalisedAndSymmetric:
    def test_normalised(self, fix_u23):
        assert check_normalised(fix_u23).holds

    def test_not_normalised(self):
        report = check_normalised(table("a", [1, 1]))
        assert not report.holds
        assert report.witness.rendered == ("{}",)
        assert report.witness.lhs == 1

    def test_symmetric(self, fix_lu13, fix_u12):
        assert check_symmetric(fix_lu13).holds
        assert not check_symmetric(fix_u12).holds

    def test_symmetric_witness_is_empty_set(self, fix_u23):
        report = check_symmetric(fix_u23)
        assert report.witness.rendered == ("{}", "{a,b,c}")
        assert (report.witness.lhs, report.witness.rhs) == (0, 2)
        assert report.describe() == (
            "symmetric fails: f({}) = 0, f({a,b,c}) = 2, expected f({}) == f({a,b,c})"
        )


class TestSubmodular:
    def test_holds(self, fix_u23, fix_lu13, fix_u12):
        for f in (fix_u23, fix_lu13, fix_u12):
            assert check_submodular_naive(f).holds
            assert check_submodular_fast(f).holds

    def test_naive_witness(self, fix_not_submodular):
        report = check_submodular_naive(fix_not_submodular)
        assert report.witness.rendered == ("{a}", "{b}")
        assert report.witness.lhs == 3
        assert report.witness.rhs == 2
        assert report.witness.relation == "<="

    def test_fast_witness(self, fix_not_submodular):
        report = check_submodular_fast(fix_not_submodular)
        assert report.witness.rendered == ("{}", "{a}", "{b}")
        assert report.witness.lhs_expr == "f({a,b}) + f({})"

    def test_naive_refuses_large_ground(self, fix_u23, set_env):
        set_env("POLYCONN_PAIR_CHECK_LIMIT", "2")
        with pytest.raises(DomainError, match="limited to 2 elements"):
            check_submodular_naive(fix_u23)

    def test_empty_ground(self):
        f = table("", [0])
        assert check_submodular_fast(f).holds
        assert check_submodular_naive(f).holds


class TestIncreasing:
    def test_holds(self, fix_u23, fix_loop):
        assert check_increasing(fix_u23).holds
        assert check_increasing(fix_loop).holds

    def test_witness_is_smallest_step(self, fix_lu13):
        report = check_increasing(fix_lu13)
        assert report.witness.rendered == ("{a,b}", "{c}")
        assert report.witness.lhs == 1
        assert report.witness.rhs == 0

    def test_naive_oracle(self, fix_lu13, fix_u23):
        assert check_increasing_naive(fix_u23).holds
        report = check_increasing_naive(fix_lu13)
        assert report.witness.rendered == ("{a}", "{a,b,c}")


class TestConnected:
    def test_connected(self, fix_lu13):
        assert check_connected(fix_lu13).holds

    def test_witness_is_lowest_mask(self, fix_disconnected):
        report = check_connected(fix_disconnected)
        assert report.witness.rendered == ("{a,b}",)
        assert report.witness.relation == ">"

    def test_small_grounds_are_connected(self, fix_loop):
        assert check_connected(fix_loop).holds


class TestValueChecks:
    def test_integer_valued(self, fix_u23):
        assert check_integer_valued(fix_u23).holds
        report = check_integer_valued(table("ab", [0, "1/2", 1, "3/2"]))
        assert report.witness.rendered == ("{a}",)
        assert report.describe() == "integer-valued fails: f({a}) = 1/2 is not in Z"

    def test_half_integral(self):
        assert check_half_integral(table("a", [0, "1/2"])).holds
        assert not check_half_integral(table("a", [0, "1/3"])).holds

    def test_tiny_denominators(self):
        f = table("a", [0, f"1/{1 << 70}"])
        report = check_integer_valued(f)
        assert report.witness.rendered == ("{a}",)
        assert not check_half_integral(f).holds
        assert f.numerators.dtype == object
        result = classify(f)
        assert result.is_polymatroid
        assert not result.is_integer_valued

    def test_unitary(self, fix_u23):
        assert check_unitary(fix_u23).holds
        report = check_unitary(table("a", [0, 2]))
        assert (report.witness.lhs, report.witness.rhs) == (2, 1)

    def test_k_polymatroid(self, fix_u23, fix_lu13):
        assert check_k_polymatroid(fix_u23, 1).holds
        assert check_k_polymatroid(table("a", [0, "3/2"]), "3/2").holds
        report = check_k_polymatroid(table("a", [0, 2]), 1)
        assert report.check == "1-polymatroid"
        assert check_k_polymatroid(fix_lu13, 5).check == "increasing"


class TestReports:
    def test_polymatroid_report_names_first_failing_axiom(self, fix_lu13, fix_u23):
        assert polymatroid_report(fix_u23).holds
        assert polymatroid_report(fix_lu13).check == "increasing"

    def test_connectivity_report(self, fix_lu13, fix_u23):
        assert connectivity_report(fix_lu13).holds
        assert connectivity_report(fix_u23).check == "symmetric"

    def test_report_is_truthy_when_holding(self, fix_u23):
        assert bool(polymatroid_report(fix_u23))
        assert not bool(connectivity_report(fix_u23))

    def test_witness_must_match_outcome(self):
        witness = Witness(
            subsets=(0,),
            rendered=("{}",),
            lhs_expr="f({})",
            rhs_expr="0",
            lhs=Fraction(1),
            rhs=Fraction(0),
            relation="==",
        )
        with pytest.raises(ValidationError):
            CheckReport(check="normalised", holds=True, witness=witness)
        with pytest.raises(ValidationError):
            CheckReport(check="normalised", holds=False)


class TestNormBounds:
    def test_polymatroid_increments_are_bounded(self, fix_u23):
        assert check_bounded_increments(fix_u23, "bounded").holds
        assert check_bounded_by_norm(fix_u23, "bounded").holds

    def test_increment_witness(self, fix_not_submodular):
        report = check_bounded_increments(fix_not_submodular, "bounded")
        assert report.witness.rendered == ("{}", "{a,b}")
        assert (report.witness.lhs, report.witness.rhs) == (3, 2)

    def test_norm_witness(self, fix_not_submodular):
        report = check_bounded_by_norm(fix_not_submodular, "bounded", "g")
        assert report.witness.lhs_expr == "g({a,b})"
        assert report.witness.rhs_expr == "||{a,b}||"


class TestCheckEqual:
    def test_first_differing_subset(self, fix_u12):
        report = check_equal(fix_u12, table("ab", [0, 1, 1, 2]), "same")
        assert report.witness.rendered == ("{a,b}",)
        assert (report.witness.lhs, report.witness.rhs) == (1, 2)

    def test_mixed_denominators(self):
        assert check_equal(table("a", [0, "2/2"]), table("a", [0, 1]), "same").holds

    def test_ground_mismatch(self, fix_u12, fix_u23):
        with pytest.raises(DomainError, match="ground sets differ"):
            check_equal(fix_u12, fix_u23, "same")


# Each failing check's inequality, rebuilt from its witness subsets as (lhs terms, rhs terms).
WITNESS_SIDES = {
    check_symmetric: lambda s: ((s[0],), (s[1],)),
    check_submodular_naive: lambda s: ((s[0] & s[1], s[0] | s[1]), (s[0], s[1])),
    check_submodular_fast: lambda s: ((s[0] | s[1] | s[2], s[0]), (s[0] | s[1], s[0] | s[2])),
    check_increasing: lambda s: ((s[0],), (s[0] | s[1],)),
    check_increasing_naive: lambda s: ((s[0],), (s[1],)),
    check_connected: lambda s: ((s[0],), ()),
    check_integer_valued: lambda s: ((s[0],), ()),
}


def _side(f, masks):
    return sum((evaluate(f, f.ground.labels_of(m)) for m in masks), Fraction(0))


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=0, max_value=5),
    seed=st.integers(min_value=0, max_value=2**32 - 1),
    halve=st.booleans(),
)
def test_witnesses_reproduce_their_violation(n, seed, halve):
    f = random_set_function(n, seed)
    if halve:
        f = scale(f, Fraction(1, 2))
    for check, sides in WITNESS_SIDES.items():
        report = check(f)
        if report.holds:
            continue
        witness = report.witness
        lhs_terms, rhs_terms = sides(witness.subsets)
        assert witness.rendered == tuple(f.ground.render(m) for m in witness.subsets)
        assert _side(f, lhs_terms) == witness.lhs
        assert _side(f, rhs_terms) == witness.rhs
        assert witness.violated


def test_holding_relation_is_not_violated():
    witness = Witness(
        subsets=(1,),
        rendered=("{a}",),
        lhs_expr="f({a})",
        rhs_expr="0",
        lhs=Fraction(1),
        rhs=Fraction(0),
        relation="<=",
    )
    assert witness.violated
    assert not witness.model_copy(update={"relation": ">"}).violated
    assert not witness.model_copy(update={"relation": "in Z"}).violated
    assert witness.model_copy(update={"lhs": Fraction(1, 3), "relation": "in Z/2"}).violated
