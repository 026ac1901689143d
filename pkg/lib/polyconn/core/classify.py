from __future__ import annotations

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, model_validator
from typing_extensions import Self

from polyconn.core.checks import (
    check_connected,
    check_half_integral,
    check_increasing,
    check_integer_valued,
    check_normalised,
    check_submodular_fast,
    check_symmetric,
    check_unitary,
)
from polyconn.core.setfunction import SetFunction


class Classification(BaseModel):
    """Every axiom flag of a set function.

    ``is_compact``, ``is_self_dual`` and ``min_k`` are only populated for polymatroids.
    ``min_k`` is the least k making the function a k-polymatroid, i.e. its largest
    singleton value (0 on the empty ground set).
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    is_normalised: bool
    is_symmetric: bool
    is_submodular: bool
    is_increasing: bool
    is_connectivity_function: bool
    is_polymatroid: bool
    is_integer_valued: bool
    is_half_integral: bool
    is_unitary: bool
    is_connected: bool
    is_compact: bool | None = None
    is_self_dual: bool | None = None
    min_k: Fraction | None = None
    max_value: Fraction

    @model_validator(mode="after")
    def derived_flags_agree(self) -> Self:
        if self.is_connectivity_function != (
            self.is_normalised and self.is_symmetric and self.is_submodular
        ):
            raise ValueError("is_connectivity_function disagrees with its axioms")
        if self.is_polymatroid != (
            self.is_normalised and self.is_submodular and self.is_increasing
        ):
            raise ValueError("is_polymatroid disagrees with its axioms")
        if not self.is_polymatroid and (
            self.is_compact is not None or self.min_k is not None or self.is_self_dual is not None
        ):
            raise ValueError("polymatroid-only fields set on a non-polymatroid")
        return self

    def lines(self) -> list[str]:
        """``key: value`` rendering used by the CLI; absent fields print as ``-``."""
        rendered: list[str] = []
        for key, value in self.model_dump().items():
            if value is None:
                text = "-"
            elif isinstance(value, bool):
                text = "true" if value else "false"
            else:
                text = str(value)
            rendered.append(f"{key}: {text}")
        return rendered


def classify(f: SetFunction) -> Classification:
    # imported here: the transforms depend on the checks this module builds on
    from polyconn.ops.transforms import compact_elements, dual

    normalised = check_normalised(f).holds
    symmetric = check_symmetric(f).holds
    submodular = check_submodular_fast(f).holds
    increasing = check_increasing(f).holds
    polymatroid = normalised and submodular and increasing

    is_compact: bool | None = None
    is_self_dual: bool | None = None
    min_k: Fraction | None = None
    if polymatroid:
        is_compact = len(compact_elements(f, enforce=False)) == f.size
        is_self_dual = dual(f, enforce=False) == f
        min_k = max((f.value(1 << i) for i in range(f.size)), default=Fraction(0))

    return Classification(
        is_normalised=normalised,
        is_symmetric=symmetric,
        is_submodular=submodular,
        is_increasing=increasing,
        is_connectivity_function=normalised and symmetric and submodular,
        is_polymatroid=polymatroid,
        is_integer_valued=check_integer_valued(f).holds,
        is_half_integral=check_half_integral(f).holds,
        is_unitary=check_unitary(f).holds,
        is_connected=check_connected(f).holds,
        is_compact=is_compact,
        is_self_dual=is_self_dual,
        min_k=min_k,
        max_value=max(f.values),
    )
