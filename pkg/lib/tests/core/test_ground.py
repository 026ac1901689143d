import numpy as np
import pytest

from polyconn import ConstructionError, DomainError, GroundSet
from polyconn.core.ground import all_masks, embedding, popcounts


class TestGroundSet:
    def test_labels_keep_order(self):
        ground = GroundSet(["c", "a", "b"])
        assert ground.labels == ("c", "a", "b")
        assert ground.index("a") == 1
        assert ground.full_mask == 0b111
        assert ground.table_size == 8

    def test_duplicate_label_rejected(self):
        with pytest.raises(ConstructionError) as exc_info:
            GroundSet(["a", "b", "a"])
        assert exc_info.value.reason == "duplicate label"
        assert exc_info.value.offender == "a"

    @pytest.mark.parametrize("label", ["", "a b", "{a}", "a,b"])
    def test_invalid_label_rejected(self, label):
        with pytest.raises(ConstructionError, match="invalid label"):
            GroundSet([label])

    def test_size_cap_from_settings(self, set_env):
        set_env("POLYCONN_MAX_GROUND_SIZE", "3")
        with pytest.raises(ConstructionError, match="larger than 3"):
            GroundSet(["a", "b", "c", "d"])

    def test_mask_of_labels_and_ints(self):
        ground = GroundSet(["a", "b", "c"])
        assert ground.mask_of(["a", "c"]) == 0b101
        assert ground.mask_of(frozenset()) == 0
        assert ground.mask_of(6) == 6

    @pytest.mark.parametrize("subset", ["ab", True, 8, -1])
    def test_mask_of_rejects(self, subset):
        ground = GroundSet(["a", "b", "c"])
        with pytest.raises(DomainError):
            ground.mask_of(subset)

    def test_unknown_label(self):
        with pytest.raises(DomainError, match="'z' is not in the ground set"):
            GroundSet(["a"]).mask_of(["z"])

    def test_render_and_without(self):
        ground = GroundSet(["a", "b", "c"])
        assert ground.render(0) == "{}"
        assert ground.render(0b101) == "{a,c}"
        assert ground.without(0b010).labels == ("a", "c")

    def test_equality_depends_on_order(self):
        assert GroundSet(["a", "b"]) == GroundSet(["a", "b"])
        assert GroundSet(["a", "b"]) != GroundSet(["b", "a"])


def test_popcounts_and_masks():
    assert popcounts(3).tolist() == [0, 1, 1, 2, 1, 2, 2, 3]
    assert all_masks(2).tolist() == [0, 1, 2, 3]


def test_embedding_spreads_bits():
    table = embedding([0, 2])
    assert table.tolist() == [0, 1, 4, 5]
    assert np.array_equal(embedding([]), np.array([0]))
