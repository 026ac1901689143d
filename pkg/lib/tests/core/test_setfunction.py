from fractions import Fraction

import numpy as np
import pytest
from tests.fixtures.setfn_fixtures import table

from polyconn import (
    ConstructionError,
    DomainError,
    GroundSet,
    SetFunction,
    equal,
    evaluate,
    make_set_function,
    norm,
)


class TestMakeSetFunction:
    def test_build_from_label_subsets(self, fix_coloop):
        f = make_set_function(["a"], [([], 0), (["a"], 1)])
        assert f == fix_coloop

    def test_missing_subset(self):
        with pytest.raises(ConstructionError) as exc_info:
            make_set_function(["a", "b"], {0: 0, 1: 1, 2: 1})
        assert exc_info.value.reason == "missing subset"
        assert exc_info.value.offender == "{a,b}"

    def test_duplicate_subset(self):
        with pytest.raises(ConstructionError, match="duplicate subset"):
            make_set_function(["a"], [(0, 0), (frozenset(), 0), (1, 1)])

    def test_unknown_label(self):
        with pytest.raises(ConstructionError, match="unknown subset"):
            make_set_function(["a"], [(0, 0), (["z"], 1)])

    def test_float_values_refused(self):
        with pytest.raises(ConstructionError, match="non-exact value"):
            make_set_function(["a"], {0: 0, 1: 0.5})

    def test_empty_ground(self):
        f = make_set_function([], {0: 0})
        assert f.size == 0
        assert f.values == (Fraction(0),)


class TestSetFunction:
    def test_values_in_lowest_terms(self):
        f = table("a", ["2/4", "3/2"])
        assert f.denominator == 2
        assert f.numerators.tolist() == [1, 3]
        assert f.values == (Fraction(1, 2), Fraction(3, 2))

    def test_numerators_are_read_only(self, fix_u23):
        with pytest.raises(ValueError):
            fix_u23.numerators[0] = 5

    def test_large_values_stay_exact(self):
        big = 1 << 80
        f = SetFunction(GroundSet(["a"]), [0, big])
        assert f.numerators.dtype == object
        assert f.value(1) == big

    def test_table_size_checked(self):
        with pytest.raises(ConstructionError, match="table must have 4 entries"):
            SetFunction(GroundSet(["a", "b"]), [0, 1, 1])

    def test_hash_matches_equality(self, fix_u12):
        assert hash(fix_u12) == hash(table("ab", [0, 1, 1, 1]))

    def test_repr_lists_subsets(self, fix_coloop):
        assert repr(fix_coloop) == "SetFunction(['a'], {{}: 0, {a}: 1})"

    def test_numerators_over(self):
        f = table("a", [0, "1/2"])
        assert np.array_equal(f.numerators_over(6), np.array([0, 3], dtype=object))


class TestEvaluate:
    def test_eval_examples(self, fix_u23, fix_lu13, fix_u12):
        assert evaluate(fix_u23, ["a", "b"]) == 2
        assert evaluate(fix_lu13, []) == 0
        assert fix_u12(["a", "b"]) == 1

    def test_eval_unknown_label(self, fix_u12):
        with pytest.raises(DomainError):
            evaluate(fix_u12, ["z"])

    def test_norm(self, fix_u23, fix_lu13):
        assert norm(fix_u23, ["a", "b", "c"]) == 3
        assert norm(fix_lu13, ["a", "b"]) == 2
        assert norm(fix_u23, []) == 0


class TestEqual:
    def test_equal_examples(self, fix_u12, fix_u23, fix_loop, fix_coloop):
        assert equal(fix_u12, table("ab", [0, 1, 1, 1]))
        assert not equal(fix_u12, fix_u23)
        assert not equal(fix_loop, fix_coloop)

    def test_label_order_matters(self):
        f = make_set_function(["a", "b"], {0: 0, 1: 1, 2: 2, 3: 3})
        g = make_set_function(["b", "a"], {0: 0, 1: 2, 2: 1, 3: 3})
        assert not equal(f, g)
