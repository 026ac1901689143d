"""The ``{a,b}`` subset grammar shared by files and command-line arguments.

A subset is ``{}`` or ``{l1,l2,...}``: labels separated by commas, no whitespace.
"""

from __future__ import annotations

import re

from polyconn._types import Mask
from polyconn.core.ground import GroundSet
from polyconn.exceptions import ParseError

SUBSET_PATTERN = re.compile(r"\{(?:[A-Za-z0-9_]+(?:,[A-Za-z0-9_]+)*)?\}")


def split_subset(text: str, line: int | None = None) -> tuple[str, ...]:
    """Labels of a subset literal, in the order written."""
    if not SUBSET_PATTERN.fullmatch(text):
        raise ParseError(f"malformed subset '{text}'", line)
    inner = text[1:-1]
    return tuple(inner.split(",")) if inner else ()


def parse_subset(text: str, ground: GroundSet, line: int | None = None) -> Mask:
    """Resolve a subset literal against a ground set.

    Raises:
        ParseError: The literal is malformed, repeats a label or names a label
            outside the ground set.
    """
    mask = 0
    for label in split_subset(text, line):
        if label not in ground:
            raise ParseError(f"unknown label '{label}' in subset {text}", line)
        bit = 1 << ground.index(label)
        if mask & bit:
            raise ParseError(f"duplicate label '{label}' in subset {text}", line)
        mask |= bit
    return mask
