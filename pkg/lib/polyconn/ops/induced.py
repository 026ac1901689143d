"""Polymatroids built from connectivity functions."""

from __future__ import annotations

from fractions import Fraction

from polyconn.core.checks import connectivity_report
from polyconn.core.setfunction import SetFunction, norm_numerators
from polyconn.ops.transforms import require, scale


def induced_polymatroid(lam: SetFunction, *, enforce: bool = True) -> SetFunction:
    """r(X) = λ(X) + ‖X‖_λ.

    For a connectivity function λ the result is a compact, self-dual polymatroid
    whose connectivity function is 2λ.
    """
    require("induced_polymatroid", lam, connectivity_report, enforce)
    return SetFunction(
        lam.ground, lam.numerators.astype(object) + norm_numerators(lam), lam.denominator
    )


def canonical_self_dual(lam: SetFunction, *, enforce: bool = True) -> SetFunction:
    """Half of the induced polymatroid: compact, self-dual, with connectivity function exactly λ.

    Integer-valued λ gives a half-integral result.
    """
    return scale(induced_polymatroid(lam, enforce=enforce), Fraction(1, 2))
