"""Transforms of polymatroids and connectivity functions, and the identities between them."""

from .identities import IdentityResult, minor_dual_identity_check, run_lemmas
from .induced import canonical_self_dual, induced_polymatroid
from .transforms import (
    compact_elements,
    compactify,
    connectivity_of,
    contract,
    delete,
    dual,
    is_self_dual,
    k_dual,
    pointwise_sum,
    scale,
)

__all__ = [
    "IdentityResult",
    "canonical_self_dual",
    "compact_elements",
    "compactify",
    "connectivity_of",
    "contract",
    "delete",
    "dual",
    "induced_polymatroid",
    "is_self_dual",
    "k_dual",
    "minor_dual_identity_check",
    "pointwise_sum",
    "run_lemmas",
    "scale",
]
