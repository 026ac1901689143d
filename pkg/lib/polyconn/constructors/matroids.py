"""Matroids and the polymatroids they induce on families of subsets."""

from __future__ import annotations

from collections.abc import Iterable, Mapping

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator
from typing_extensions import Self

from polyconn.core.checks import (
    CheckReport,
    check_integer_valued,
    check_unitary,
    passed,
    polymatroid_report,
)
from polyconn.core.ground import GroundSet, popcounts
from polyconn.core.setfunction import SetFunction
from polyconn.exceptions import ConstructionError, DomainError
from polyconn.ops.transforms import connectivity_of, require


def _ground(labels: GroundSet | Iterable[str]) -> GroundSet:
    return labels if isinstance(labels, GroundSet) else GroundSet(labels)


def default_labels(n: int) -> list[str]:
    return [f"e{i}" for i in range(1, n + 1)]


def uniform_matroid(
    rank: int, n: int, labels: GroundSet | Iterable[str] | None = None
) -> SetFunction:
    """U_{rank,n}: r(X) = min(|X|, rank). Labels default to ``e1 .. en``."""
    if rank < 0 or n < 0:
        raise DomainError(f"rank and size must be nonnegative, got rank={rank}, n={n}")
    if rank > n:
        raise DomainError(f"rank {rank} exceeds the number of elements {n}")
    ground = _ground(default_labels(n) if labels is None else labels)
    if ground.size != n:
        raise DomainError(f"expected {n} labels, got {ground.size}")
    return SetFunction(ground, np.minimum(popcounts(n), rank))


def free_matroid(labels: GroundSet | Iterable[str]) -> SetFunction:
    """r(X) = |X|."""
    ground = _ground(labels)
    return SetFunction(ground, popcounts(ground.size))


def matroid_check(r: SetFunction) -> CheckReport:
    """Holds iff r is an integer-valued polymatroid with every singleton value at most 1."""
    for report in (polymatroid_report(r), check_integer_valued(r), check_unitary(r)):
        if not report.holds:
            return report
    return passed("matroid")


def matroid_connectivity(m: SetFunction, *, enforce: bool = True) -> SetFunction:
    """λ_M of a matroid rank function; integer-valued and unitary."""
    require("matroid_connectivity", m, matroid_check, enforce)
    return connectivity_of(m, enforce=False)


class Member(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    subset: frozenset[str]


class SubsetFamily(BaseModel):
    """Labelled subsets of a base set V; the labels become the elements of r_P."""

    model_config = ConfigDict(frozen=True)

    base: tuple[str, ...]
    members: tuple[Member, ...]

    @model_validator(mode="after")
    def members_fit_base(self) -> Self:
        base = set(self.base)
        # member labels are validated (distinct, well-formed, capped) by the ground set
        GroundSet(member.label for member in self.members)
        for member in self.members:
            outside = sorted(member.subset - base)
            if outside:
                raise ConstructionError(
                    outside[0], f"member {member.label} is not a subset of the base"
                )
        return self

    @classmethod
    def of(
        cls, base: GroundSet | Iterable[str], members: Mapping[str, Iterable[str]]
    ) -> SubsetFamily:
        labels = base.labels if isinstance(base, GroundSet) else tuple(base)
        return cls(
            base=labels,
            members=tuple(
                Member(label=label, subset=frozenset(subset)) for label, subset in members.items()
            ),
        )

    @property
    def ground(self) -> GroundSet:
        return GroundSet(member.label for member in self.members)

    def member_masks(self, base: GroundSet) -> list[int]:
        return [base.mask_of(sorted(member.subset)) for member in self.members]


def polymatroid_from_subsets(
    m: SetFunction, family: SubsetFamily, *, enforce: bool = True
) -> SetFunction:
    """r_P(X) = r_M(union of the member subsets selected by X).

    Raises:
        DomainError: The matroid's ground set is not the family's base.
        PreconditionError: ``m`` is not a matroid rank function.
    """
    if m.ground.labels != family.base:
        raise DomainError(
            f"matroid ground {list(m.ground.labels)} differs from base {list(family.base)}"
        )
    require("polymatroid_from_subsets", m, matroid_check, enforce)
    unions = np.zeros(1, dtype=np.int64)
    for mask in family.member_masks(m.ground):
        unions = np.concatenate([unions, unions | mask])
    return SetFunction(family.ground, m.numerators[unions], m.denominator)
