"""The ``setfn v1`` text format.

Example document::

    setfn v1
    elements a b
    {} = 0
    {a} = 1
    {b} = 1
    {a,b} = 1

Subset lines may come in any order, each subset exactly once. Values are integers
or ``p/q`` with ``q > 0``. Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import re
from fractions import Fraction

from polyconn.core.ground import GroundSet
from polyconn.core.setfunction import SetFunction
from polyconn.exceptions import ConstructionError, ParseError
from polyconn.formats._text import expect_header, significant_lines
from polyconn.formats.subsets import parse_subset

MAGIC = "setfn v1"
VALUE_PATTERN = re.compile(r"([+-]?\d+)(?:/(\d+))?")


def parse_value(text: str, line: int | None = None) -> Fraction:
    match = VALUE_PATTERN.fullmatch(text)
    if match is None:
        raise ParseError(f"invalid value '{text}'", line)
    numerator, denominator = match.groups()
    try:
        p, q = int(numerator), int(denominator or 1)
    except ValueError:
        # int() refuses digit strings past sys.get_int_max_str_digits()
        raise ParseError("value has too many digits", line) from None
    if q == 0:
        raise ParseError("zero denominator", line)
    return Fraction(p, q)


def parse(document: str) -> SetFunction:
    """Parse a ``setfn v1`` document.

    Raises:
        ParseError: With the offending line number, or none when a problem (such
            as a missing subset) is only detectable at end of file.
    """
    lines = significant_lines(document)
    header_line, labels = expect_header(lines, MAGIC, "elements")
    try:
        ground = GroundSet(labels)
    except ConstructionError as exc:
        raise ParseError(exc.message, header_line) from None

    table: list[Fraction | None] = [None] * ground.table_size
    for number, text in lines:
        subset_text, equals, value_text = text.partition("=")
        if not equals:
            raise ParseError("expected '<subset> = <value>'", number)
        mask = parse_subset(subset_text.strip(), ground, number)
        tokens = value_text.split()
        if not tokens:
            raise ParseError("missing value", number)
        if len(tokens) > 1:
            raise ParseError(f"trailing garbage '{' '.join(tokens[1:])}'", number)
        if table[mask] is not None:
            raise ParseError(f"duplicate subset {ground.render(mask)}", number)
        table[mask] = parse_value(tokens[0], number)

    for mask, value in enumerate(table):
        if value is None:
            raise ParseError(f"missing subset {ground.render(mask)}")
    return SetFunction.from_values(ground, table)  # type: ignore[arg-type]


def serialize(f: SetFunction) -> str:
    """Canonical form: ascending mask order, lowest terms, no comments."""
    lines = [MAGIC, " ".join(["elements", *f.ground.labels])]
    lines.extend(f"{f.ground.render(mask)} = {value}" for mask, value in enumerate(f.values))
    return "\n".join(lines) + "\n"
