import pytest
from hypothesis import given

from conftest import ideals
from monobetti.errors import InputError
from monobetti.parsing import format_ideal, parse_ideal, parse_monomial, read_corpus


def test_basic():
    J = parse_ideal("x^2, x*y, y^2")
    assert J.variables == ("x", "y")
    assert J.q == 3


def test_header_fixes_variables():
    J = parse_ideal("vars: a, b, c; a*b")
    assert J.variables == ("a", "b", "c")


@pytest.mark.parametrize("bad", ["x^0", "2*x", "x^", "x,,y", "", "x*", "vars: x; y"])
def test_rejects(bad):
    with pytest.raises(InputError):
        parse_ideal(bad)


def test_error_position():
    with pytest.raises(InputError, match="column"):
        parse_ideal("x, y^z")


def test_monomial():
    assert parse_monomial("x^2*y").degree == 3


def test_corpus_skips_comments():
    text = "# header\nx*y, y*z\n\nvars: a, b; a^2, b\n"
    assert [J.q for J in read_corpus(text)] == [2, 2]


@given(ideals())
def test_roundtrip(J):
    assert parse_ideal(format_ideal(J)) == J
