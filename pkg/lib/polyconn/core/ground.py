"""Ordered ground sets and subset masks.

A subset of a ground set with labels ``(l0, l1, ..., l{n-1})`` is an ``int`` mask
whose bit ``i`` is set exactly when ``labels[i]`` belongs to the subset.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Sequence

import numpy as np

from polyconn._types import Mask, SubsetLike
from polyconn.config import get_settings
from polyconn.exceptions import ConstructionError, DomainError

LABEL_PATTERN = re.compile(r"[A-Za-z0-9_]+")


class GroundSet:
    """An immutable, ordered sequence of distinct element labels."""

    __slots__ = ("_labels", "_index")

    def __init__(self, labels: Iterable[str]) -> None:
        labels = tuple(labels)
        cap = get_settings().max_ground_size
        if len(labels) > cap:
            raise ConstructionError(str(len(labels)), f"ground set larger than {cap} elements")
        index: dict[str, int] = {}
        for position, label in enumerate(labels):
            if not isinstance(label, str) or not LABEL_PATTERN.fullmatch(label):
                raise ConstructionError(repr(label), "invalid label")
            if label in index:
                raise ConstructionError(label, "duplicate label")
            index[label] = position
        self._labels = labels
        self._index = index

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def size(self) -> int:
        return len(self._labels)

    @property
    def full_mask(self) -> Mask:
        return (1 << len(self._labels)) - 1

    @property
    def table_size(self) -> int:
        return 1 << len(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self._labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroundSet):
            return NotImplemented
        return self._labels == other._labels

    def __hash__(self) -> int:
        return hash(self._labels)

    def __repr__(self) -> str:
        return f"GroundSet({list(self._labels)!r})"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise DomainError(f"label '{label}' is not in the ground set") from None

    def mask_of(self, subset: SubsetLike) -> Mask:
        """Resolve a mask or an iterable of labels to a validated mask."""
        if isinstance(subset, (bool, str)):
            raise DomainError(f"expected a mask or a collection of labels, got {subset!r}")
        if isinstance(subset, (int, np.integer)):
            mask = int(subset)
            if mask < 0 or mask > self.full_mask:
                raise DomainError(f"mask {mask} is outside the ground set of size {self.size}")
            return mask
        mask = 0
        for label in subset:
            mask |= 1 << self.index(label)
        return mask

    def labels_of(self, mask: Mask) -> tuple[str, ...]:
        return tuple(label for i, label in enumerate(self._labels) if mask >> i & 1)

    def render(self, mask: Mask) -> str:
        """Render a mask in the shared ``{a,b}`` syntax."""
        return "{" + ",".join(self.labels_of(mask)) + "}"

    def without(self, mask: Mask) -> GroundSet:
        """Ground set E − A, keeping the original relative order."""
        return GroundSet(label for i, label in enumerate(self._labels) if not mask >> i & 1)

    def positions(self, mask: Mask) -> list[int]:
        return [i for i in range(self.size) if mask >> i & 1]


def embedding(positions: Sequence[int]) -> np.ndarray:
    """Map every mask over ``len(positions)`` bits to a mask over the original bits.

    Entry ``m`` of the result is the original mask whose bit ``positions[i]`` is set
    for every bit ``i`` set in ``m``.
    """
    table = np.zeros(1, dtype=np.int64)
    for position in positions:
        table = np.concatenate([table, table + (1 << position)])
    return table


def popcounts(n: int) -> np.ndarray:
    table = np.zeros(1, dtype=np.int64)
    for _ in range(n):
        table = np.concatenate([table, table + 1])
    return table


def all_masks(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)
