"""Dense exact set functions.

A SetFunction stores one exact rational per subset of its ground set. Values are
kept as a single numpy vector of integer numerators over one common positive
denominator, in lowest terms: ``value(X) == Fraction(numerators[X], denominator)``.
Numerators are ``int64`` while they and the denominator are small enough for every
check to add two of them without overflow, and Python integers (``object`` dtype)
otherwise, so arithmetic is exact at any magnitude.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from typing import Any, TypeAlias

import numpy as np

from polyconn._types import Mask, SubsetLike
from polyconn.core.ground import GroundSet
from polyconn.exceptions import ConstructionError, DomainError

RatLike: TypeAlias = Fraction | int | str

_INT64_SAFE = 1 << 61


def to_rat(value: RatLike) -> Fraction:
    """Coerce an int, Fraction or ``p/q`` string to a Fraction; floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise ConstructionError(repr(value), "non-exact value")
    if isinstance(value, (Fraction, int, np.integer)):
        return Fraction(int(value)) if isinstance(value, np.integer) else Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ConstructionError(repr(value), "invalid rational") from None
    raise ConstructionError(repr(value), "non-exact value")


def pack(values: Any, denominator: int = 1) -> np.ndarray:
    """Build a read-only numerator vector, as int64 when that is overflow-safe.

    Checks reduce numerators modulo the denominator, so both must fit.
    """
    array = np.array(values, dtype=object).reshape(-1)
    if (
        array.size
        and denominator < _INT64_SAFE
        and max(abs(int(array.max())), abs(int(array.min()))) < _INT64_SAFE
    ):
        array = array.astype(np.int64)
    array.flags.writeable = False
    return array


def _common_gcd(numerators: np.ndarray, denominator: int) -> int:
    if numerators.dtype == np.int64:
        return math.gcd(int(np.gcd.reduce(np.abs(numerators))), denominator)
    return math.gcd(denominator, *(int(v) for v in numerators))


class SetFunction:
    """An immutable exact function from the subsets of a ground set to the rationals."""

    __slots__ = ("_ground", "_num", "_den", "_values")

    def __init__(self, ground: GroundSet, numerators: Any, denominator: int = 1) -> None:
        numerators = np.array(numerators, dtype=object).reshape(-1)
        if numerators.size != ground.table_size:
            raise ConstructionError(
                str(numerators.size), f"table must have {ground.table_size} entries"
            )
        denominator = int(denominator)
        if denominator <= 0:
            raise ConstructionError(str(denominator), "denominator must be positive")
        divisor = _common_gcd(numerators, denominator)
        if divisor > 1:
            numerators = numerators // divisor
            denominator //= divisor
        self._ground = ground
        self._num = pack(numerators, denominator)
        self._den = denominator
        self._values: tuple[Fraction, ...] | None = None

    @classmethod
    def from_values(cls, ground: GroundSet, values: Sequence[RatLike]) -> SetFunction:
        """Build from values listed in ascending mask order."""
        rats = [to_rat(value) for value in values]
        denominator = math.lcm(1, *(rat.denominator for rat in rats))
        return cls(
            ground,
            [rat.numerator * (denominator // rat.denominator) for rat in rats],
            denominator,
        )

    @property
    def ground(self) -> GroundSet:
        return self._ground

    @property
    def size(self) -> int:
        return self._ground.size

    @property
    def numerators(self) -> np.ndarray:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def values(self) -> tuple[Fraction, ...]:
        if self._values is None:
            self._values = tuple(Fraction(int(v), self._den) for v in self._num)
        return self._values

    def value(self, mask: Mask) -> Fraction:
        return Fraction(int(self._num[mask]), self._den)

    def numerators_over(self, denominator: int) -> np.ndarray:
        """Numerators rescaled to a multiple of the stored denominator, as Python ints."""
        return self._num.astype(object) * (denominator // self._den)

    def __call__(self, subset: SubsetLike) -> Fraction:
        return evaluate(self, subset)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFunction):
            return NotImplemented
        return equal(self, other)

    def __hash__(self) -> int:
        return hash((self._ground, self._den, tuple(int(v) for v in self._num)))

    def __repr__(self) -> str:
        entries = ", ".join(
            f"{self._ground.render(mask)}: {value}" for mask, value in enumerate(self.values)
        )
        return f"SetFunction({list(self._ground.labels)!r}, {{{entries}}})"


def make_set_function(
    ground: GroundSet | Iterable[str],
    values: Mapping[Any, RatLike] | Iterable[tuple[Any, RatLike]],
) -> SetFunction:
    """Build a set function from one value per subset.

    Args:
        ground: The ground set, or its labels in order.
        values: A mapping, or an iterable of ``(subset, value)`` pairs, where each
            subset is a mask or a collection of labels.

    Raises:
        ConstructionError: A subset is missing or given twice, or a label is unknown.
    """
    if not isinstance(ground, GroundSet):
        ground = GroundSet(ground)
    pairs = values.items() if isinstance(values, Mapping) else values
    table: list[Fraction | None] = [None] * ground.table_size
    for subset, value in pairs:
        try:
            mask = ground.mask_of(subset)
        except DomainError as exc:
            raise ConstructionError(repr(subset), f"unknown subset ({exc.message})") from None
        if table[mask] is not None:
            raise ConstructionError(ground.render(mask), "duplicate subset")
        table[mask] = to_rat(value)
    for mask, entry in enumerate(table):
        if entry is None:
            raise ConstructionError(ground.render(mask), "missing subset")
    return SetFunction.from_values(ground, table)  # type: ignore[arg-type]


def zero_function(ground: GroundSet | Iterable[str]) -> SetFunction:
    if not isinstance(ground, GroundSet):
        ground = GroundSet(ground)
    return SetFunction(ground, [0] * ground.table_size)


def evaluate(f: SetFunction, subset: SubsetLike) -> Fraction:
    """Return f(X)."""
    return f.value(f.ground.mask_of(subset))


def norm(f: SetFunction, subset: SubsetLike) -> Fraction:
    """Return the sum of f({x}) over the elements x of X."""
    mask = f.ground.mask_of(subset)
    total = sum(int(f.numerators[1 << i]) for i in f.ground.positions(mask))
    return Fraction(total, f.denominator)


def norm_numerators(f: SetFunction, denominator: int | None = None) -> np.ndarray:
    """Vector of norm numerators over ``denominator`` (default: f's own), indexed by mask."""
    denominator = f.denominator if denominator is None else denominator
    scale = denominator // f.denominator
    table = np.zeros(1, dtype=object)
    for i in range(f.size):
        table = np.concatenate([table, table + int(f.numerators[1 << i]) * scale])
    return table


def equal(f: SetFunction, g: SetFunction) -> bool:
    """True iff both grounds list the same labels in the same order and all values agree."""
    if f.ground != g.ground or f.denominator != g.denominator:
        return False
    return bool(np.array_equal(f.numerators, g.numerators))
