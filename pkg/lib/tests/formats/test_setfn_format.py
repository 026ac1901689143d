from fractions import Fraction

import pytest
from tests.fixtures.setfn_fixtures import table

from polyconn import ParseError, parse, serialize
from polyconn.formats import parse_value

U12_DOCUMENT = """\
setfn v1
elements a b
{} = 0
{a} = 1
{b} = 1
{a,b} = 1
"""


def test_parse(fix_u12):
    assert parse(U12_DOCUMENT) == fix_u12


def test_serialize_is_canonical(fix_u12):
    assert serialize(fix_u12) == U12_DOCUMENT


def test_any_order_comments_and_blank_lines(fix_u12):
    document = """
    # rank of U_{1,2}
    setfn v1

    elements a b
    {a,b} = 1
    {b} = 1   
    # the empty set
    {} = 0
    {a} = 1
    """
    assert parse(document) == fix_u12


def test_label_order_in_subset_is_free():
    document = "setfn v1\nelements a b\n{} = 0\n{a} = 1\n{b} = 2\n{b,a} = 3\n"
    assert parse(document)(["a", "b"]) == 3


def test_rationals_are_reduced():
    f = parse("setfn v1\nelements a\n{} = 0/5\n{a} = -4/6\n")
    assert f.values == (0, Fraction(-2, 3))
    assert serialize(f).splitlines()[-1] == "{a} = -2/3"


def test_empty_ground():
    f = parse("setfn v1\nelements\n{} = 0\n")
    assert f.size == 0
    assert serialize(f) == "setfn v1\nelements\n{} = 0\n"


def test_serialize_uses_lowest_terms_of_big_values():
    f = table("a", [0, str(1 << 70)])
    assert serialize(f).splitlines()[-1] == f"{{a}} = {1 << 70}"


@pytest.mark.parametrize(
    ("text", "value"), [("3", 3), ("-2", -2), ("+7/2", Fraction(7, 2)), ("6/4", Fraction(3, 2))]
)
def test_parse_value(text, value):
    assert parse_value(text) == value


@pytest.mark.parametrize("text", ["1.5", "1/", "/2", "a", "1/-2", "1 /2"])
def test_invalid_value(text):
    with pytest.raises(ParseError, match="invalid value"):
        parse_value(text)


@pytest.mark.parametrize(
    ("document", "line", "cause"),
    [
        ("", None, "bad magic, expected 'setfn v1'"),
        ("setfn v2\nelements a\n", 1, "bad magic, expected 'setfn v1'"),
        ("setfn v1 extra\n", 1, "trailing garbage 'extra'"),
        ("setfn v1\n", None, "missing 'elements' line"),
        ("setfn v1\nlabels a\n", 2, "expected 'elements' line"),
        ("setfn v1\nelements a a\n", 2, "duplicate label 'a'"),
        ("setfn v1\nelements a-b\n", 2, "invalid label 'a-b'"),
        ("setfn v1\nelements a\n{} 0\n", 3, "expected '<subset> = <value>'"),
        ("setfn v1\nelements a\n{} =\n", 3, "missing value"),
        ("setfn v1\nelements a\n{} = 0 1\n", 3, "trailing garbage '1'"),
        ("setfn v1\nelements a\n{} = 1/0\n", 3, "zero denominator"),
        ("setfn v1\nelements a\n{} = 0.5\n", 3, "invalid value '0.5'"),
        ("setfn v1\nelements a\n{} = 0\n{} = 0\n", 4, "duplicate subset {}"),
        ("setfn v1\nelements a\n{b} = 0\n", 3, "unknown label 'b' in subset {b}"),
        ("setfn v1\nelements a\n{a, } = 0\n", 3, "malformed subset '{a, }'"),
        ("setfn v1\nelements a b\n{} = 0\n{a} = 1\n", None, "missing subset {b}"),
    ],
)
def test_diagnostics(document, line, cause):
    with pytest.raises(ParseError) as info:
        parse(document)
    assert info.value.line == line
    assert info.value.cause == cause


def test_ground_cap_is_reported_on_header_line(set_env):
    set_env("POLYCONN_MAX_GROUND_SIZE", "1")
    with pytest.raises(ParseError) as info:
        parse("setfn v1\nelements a b\n")
    assert info.value.line == 2
    assert "larger than 1" in info.value.cause


def test_missing_subset_message():
    with pytest.raises(ParseError, match="^end of file: missing subset"):
        parse("setfn v1\nelements a\n{} = 0\n")
