"""Polymatroid transforms: connectivity, duals, compactification, minors, scaling, sums.

All transforms are pure. Those whose guarantees only hold for polymatroids check
that hypothesis first and raise PreconditionError otherwise; ``enforce=False``
skips the check and evaluates the raw formula.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from typing import Literal

import numpy as np

from polyconn._types import SubsetLike
from polyconn.core.checks import CheckReport, check_k_polymatroid, polymatroid_report
from polyconn.core.ground import all_masks, embedding, popcounts
from polyconn.core.setfunction import RatLike, SetFunction, norm_numerators, to_rat
from polyconn.exceptions import DomainError, PreconditionError


def require(
    operation: str,
    f: SetFunction,
    report_for: Callable[[SetFunction], CheckReport],
    enforce: bool,
) -> None:
    if not enforce:
        return
    report = report_for(f)
    if not report.holds:
        raise PreconditionError(operation, report)


def _complement_values(r: SetFunction, num: np.ndarray) -> np.ndarray:
    return num[r.ground.full_mask ^ all_masks(r.size)]


def connectivity_of(r: SetFunction, *, enforce: bool = True) -> SetFunction:
    """λ(X) = r(X) + r(E−X) − r(E)."""
    require("connectivity_of", r, polymatroid_report, enforce)
    num = r.numerators.astype(object)
    full = r.ground.full_mask
    return SetFunction(r.ground, num + _complement_values(r, num) - num[full], r.denominator)


def dual(r: SetFunction, *, enforce: bool = True) -> SetFunction:
    """r*(X) = r(E−X) + ‖X‖_r − r(E)."""
    require("dual", r, polymatroid_report, enforce)
    num = r.numerators.astype(object)
    full = r.ground.full_mask
    return SetFunction(
        r.ground,
        _complement_values(r, num) + norm_numerators(r) - num[full],
        r.denominator,
    )


def k_dual(r: SetFunction, k: RatLike, *, enforce: bool = True) -> SetFunction:
    """r^{*k}(X) = r(E−X) + k|X| − r(E)."""
    bound = to_rat(k)
    if bound <= 0:
        raise DomainError(f"k must be positive, got {bound}")
    require("k_dual", r, lambda f: check_k_polymatroid(f, bound), enforce)
    denominator = math.lcm(r.denominator, bound.denominator)
    num = r.numerators_over(denominator)
    full = r.ground.full_mask
    k_num = bound.numerator * (denominator // bound.denominator)
    sizes = popcounts(r.size).astype(object)
    return SetFunction(
        r.ground,
        _complement_values(r, num) + sizes * k_num - num[full],
        denominator,
    )


def compactify(r: SetFunction, *, enforce: bool = True) -> SetFunction:
    """r♭(X) = r(X) + Σ_{x∈X} (λ({x}) − r({x})).

    Each correction λ({x}) − r({x}) equals r(E−x) − r(E).
    """
    require("compactify", r, polymatroid_report, enforce)
    num = r.numerators.astype(object)
    full = r.ground.full_mask
    correction = np.zeros(1, dtype=object)
    for i in range(r.size):
        step = num[full ^ 1 << i] - num[full]
        correction = np.concatenate([correction, correction + step])
    return SetFunction(r.ground, num + correction, r.denominator)


def compact_elements(
    r: SetFunction,
    *,
    via: Literal["spanning", "connectivity"] = "spanning",
    enforce: bool = True,
) -> frozenset[str]:
    """Elements e with r(E−{e}) = r(E), or equivalently r({e}) = λ({e}).

    ``via`` picks which of the two equivalent characterizations is evaluated.
    """
    require("compact_elements", r, polymatroid_report, enforce)
    full = r.ground.full_mask
    if via == "spanning":
        members = [
            label
            for i, label in enumerate(r.ground)
            if r.numerators[full ^ 1 << i] == r.numerators[full]
        ]
    else:
        lam = connectivity_of(r, enforce=False)
        members = [
            label for i, label in enumerate(r.ground) if r.value(1 << i) == lam.value(1 << i)
        ]
    return frozenset(members)


def is_self_dual(r: SetFunction, *, enforce: bool = True) -> bool:
    require("is_self_dual", r, polymatroid_report, enforce)
    return dual(r, enforce=False) == r


def _minor_embedding(r: SetFunction, removed: int) -> np.ndarray:
    kept = [i for i in range(r.size) if not removed >> i & 1]
    return embedding(kept)


def delete(r: SetFunction, subset: SubsetLike, *, enforce: bool = True) -> SetFunction:
    """Restriction of r to the subsets of E−A, on ground E−A."""
    removed = r.ground.mask_of(subset)
    require("delete", r, polymatroid_report, enforce)
    num = r.numerators
    return SetFunction(
        r.ground.without(removed), num[_minor_embedding(r, removed)], r.denominator
    )


def contract(r: SetFunction, subset: SubsetLike, *, enforce: bool = True) -> SetFunction:
    """r_{P/A}(X) = r(X ∪ A) − r(A), on ground E−A."""
    removed = r.ground.mask_of(subset)
    require("contract", r, polymatroid_report, enforce)
    num = r.numerators.astype(object)
    return SetFunction(
        r.ground.without(removed),
        num[_minor_embedding(r, removed) | removed] - num[removed],
        r.denominator,
    )


def scale(f: SetFunction, factor: RatLike) -> SetFunction:
    """Multiply every value by a positive rational."""
    c = to_rat(factor)
    if c <= 0:
        raise DomainError(f"scale factor must be positive, got {c}")
    return SetFunction(
        f.ground, f.numerators.astype(object) * c.numerator, f.denominator * c.denominator
    )


def pointwise_sum(f: SetFunction, g: SetFunction) -> SetFunction:
    """(f + g)(X) = f(X) + g(X) on a shared ground set."""
    if f.ground != g.ground:
        raise DomainError(
            f"ground sets differ: {list(f.ground.labels)} vs {list(g.ground.labels)}"
        )
    denominator = math.lcm(f.denominator, g.denominator)
    return SetFunction(
        f.ground, f.numerators_over(denominator) + g.numerators_over(denominator), denominator
    )
