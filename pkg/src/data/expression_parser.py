"""
Text form of levelled numbers: `c1*u^g1 + c2*u^g2 + ...`

Levels are exact rationals written `p/q`. Coefficients may be integers,
fractions or decimals and are read exactly. "0" is the zero number.
"""
import logging
import re
from fractions import Fraction

from ..models.levelled import LevelledNumber, Spectrum
from ..utils.errors import ExpressionParseError

logger = logging.getLogger(__name__)

_NUMBER = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_TERM = re.compile(
    rf"(?:(?P<coef>[+-]?{_NUMBER}(?:/\d+)?)\s*\*\s*|(?P<sign>[+-]?))"
    r"u\s*\^\s*(?P<level>[+-]?\d+(?:/\d+)?)"
)
_CONSTANT = re.compile(rf"(?P<coef>[+-]?{_NUMBER}(?:/\d+)?)(?![\s]*[*/\d])")
_SEPARATOR = re.compile(r"\s*([+-])\s*")
_SPACE = re.compile(r"\s*")


def _format_coefficient(c) -> str:
    if isinstance(c, Fraction):
        return str(c)
    return repr(float(c))


def format_levelled(x: LevelledNumber) -> str:
    """Render x in the textual grammar; zero renders as "0" """
    if x.is_zero():
        return "0"
    return " + ".join(f"{_format_coefficient(c)}*u^{g}" for g, c in x.terms)


def format_spectrum(spectrum: Spectrum) -> list[str]:
    """One `coefficient*u^g` line per entry, in decreasing magnitude"""
    return [
        f"{_format_coefficient(entry.coefficient)}*u^{entry.level.g}"
        for entry in spectrum.entries
    ]


def _exact(token: str, position: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ExpressionParseError(f"Invalid number '{token}'", position) from None


def parse_levelled(text: str) -> LevelledNumber:
    """
    Parse the textual grammar into an exact LevelledNumber

    A bare constant c is read as c*u^0 and `u^g` as 1*u^g. Terms are joined by
    `+` or `-`; repeated levels are summed.

    Args:
        text: Expression such as "3*u^0 + -2*u^1/2"

    Returns:
        Canonical LevelledNumber with Fraction coefficients

    Raises:
        ExpressionParseError: with the character position of the first problem
    """
    pos = _SPACE.match(text, 0).end()
    if pos == len(text):
        raise ExpressionParseError("Empty expression", pos)

    terms: list[tuple[Fraction, Fraction]] = []
    negate_next = False
    while True:
        start = pos
        match = _TERM.match(text, pos)
        if match:
            if match.group("coef") is not None:
                coefficient = _exact(match.group("coef"), start)
            else:
                coefficient = Fraction(-1 if match.group("sign") == "-" else 1)
            level = _exact(match.group("level"), match.start("level"))
        else:
            match = _CONSTANT.match(text, pos)
            if not match:
                raise ExpressionParseError("Expected a term like c*u^g", start)
            coefficient = _exact(match.group("coef"), start)
            level = Fraction(0)
        if negate_next:
            coefficient = -coefficient
        terms.append((level, coefficient))
        pos = match.end()

        end = _SPACE.match(text, pos).end()
        if end == len(text):
            break
        separator = _SEPARATOR.match(text, pos)
        if not separator:
            raise ExpressionParseError(f"Unexpected character '{text[end]}'", end)
        negate_next = separator.group(1) == "-"
        pos = separator.end()
        if pos == len(text):
            raise ExpressionParseError("Expression ends after an operator", pos)

    logger.debug(f"Parsed {len(terms)} terms from '{text}'")
    return LevelledNumber.from_terms(terms)
