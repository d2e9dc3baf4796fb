from fractions import Fraction

import pytest

from src.calculations.decomposition import SpectrumDecomposer
from src.data.expression_parser import format_levelled, format_spectrum, parse_levelled
from src.models.levelled import LevelledNumber
from src.utils.errors import ExpressionParseError

L = LevelledNumber


def test_parse_zero():
    assert parse_levelled("0").is_zero()
    assert parse_levelled("  0 ").is_zero()


def test_parse_two_terms():
    x = parse_levelled("3*u^0 + -2*u^1/2")
    assert x == L.from_terms([(0, 3), ("1/2", -2)])
    assert parse_levelled("3*u^0 - 2*u^1/2") == x


def test_parse_shorthand_terms():
    assert parse_levelled("5 + 2*u^1") == L.from_terms([(0, 5), (1, 2)])
    assert parse_levelled("-u^2") == L.monomial(-1, 2)
    assert parse_levelled("u^-1 + u^-1") == L.monomial(2, -1)


def test_parse_exact_coefficients():
    assert parse_levelled("1.5*u^0").coefficient(0) == Fraction(3, 2)
    assert parse_levelled("3/4*u^2/3").coefficient("2/3") == Fraction(3, 4)
    assert parse_levelled("1e-3*u^1").coefficient(1) == Fraction(1, 1000)


def test_format_matches_grammar():
    x = L.from_terms([(0, 3), ("1/2", -2)])
    assert format_levelled(x) == "3*u^0 + -2*u^1/2"
    assert format_levelled(L.zero()) == "0"
    assert parse_levelled(format_levelled(x)) == x


def test_format_spectrum_order():
    spectrum = SpectrumDecomposer.decompose(parse_levelled("u^3 + 7*u^-1/2"))
    assert format_spectrum(spectrum) == ["7*u^-1/2", "1*u^3"]


@pytest.mark.parametrize(
    "text,position",
    [
        ("", 0),
        ("3*u^0 +", 7),
        ("3*x^0", 0),
        ("3*u^0 ? 2", 6),
        ("u^1/0", 2),
        ("2*u^0 + + u^1", 8),
    ],
)
def test_parse_errors_report_position(text, position):
    with pytest.raises(ExpressionParseError) as excinfo:
        parse_levelled(text)
    assert excinfo.value.position == position
    assert f"at position {position}" in str(excinfo.value)
