"""Dense exact set functions, their norm, and the axiom checks."""

from .checks import (
    CheckReport,
    Witness,
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
from .classify import Classification, classify
from .ground import GroundSet
from .setfunction import (
    SetFunction,
    equal,
    evaluate,
    make_set_function,
    norm,
    to_rat,
    zero_function,
)

__all__ = [
    "CheckReport",
    "Classification",
    "GroundSet",
    "SetFunction",
    "Witness",
    "check_connected",
    "check_half_integral",
    "check_increasing",
    "check_increasing_naive",
    "check_integer_valued",
    "check_k_polymatroid",
    "check_normalised",
    "check_submodular_fast",
    "check_submodular_naive",
    "check_symmetric",
    "check_unitary",
    "classify",
    "connectivity_report",
    "equal",
    "evaluate",
    "make_set_function",
    "norm",
    "polymatroid_report",
    "to_rat",
    "zero_function",
]
