"""Line handling shared by the text formats."""

from __future__ import annotations

from collections.abc import Iterator

from polyconn.core.ground import LABEL_PATTERN
from polyconn.exceptions import ParseError


def significant_lines(document: str) -> Iterator[tuple[int, str]]:
    """Yield ``(line number, stripped text)``, skipping blank and ``#`` comment lines."""
    for number, raw in enumerate(document.splitlines(), start=1):
        text = raw.strip()
        if text and not text.startswith("#"):
            yield number, text


def expect_header(
    lines: Iterator[tuple[int, str]], magic: str, keyword: str
) -> tuple[int, list[str]]:
    """Consume the magic line and the ``<keyword> <labels...>`` line after it.

    Returns the header line number and the declared labels.
    """
    first = next(lines, None)
    if first is None:
        raise ParseError(f"bad magic, expected '{magic}'")
    number, text = first
    tokens = text.split()
    if tokens[:2] != magic.split():
        raise ParseError(f"bad magic, expected '{magic}'", number)
    if len(tokens) > 2:
        raise ParseError(f"trailing garbage '{' '.join(tokens[2:])}'", number)

    second = next(lines, None)
    if second is None:
        raise ParseError(f"missing '{keyword}' line")
    number, text = second
    tokens = text.split()
    if tokens[0] != keyword:
        raise ParseError(f"expected '{keyword}' line", number)
    labels = tokens[1:]
    seen: set[str] = set()
    for label in labels:
        if not LABEL_PATTERN.fullmatch(label):
            raise ParseError(f"invalid label '{label}'", number)
        if label in seen:
            raise ParseError(f"duplicate label '{label}'", number)
        seen.add(label)
    return number, labels
