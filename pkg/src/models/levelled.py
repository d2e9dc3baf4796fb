"""
Levelled numbers: finite formal sums c1*u^g1 + c2*u^g2 + ... over rational levels

u is a positive infinitesimal, so a smaller exponent g means a larger
magnitude. g = 0 is the class of finite non-infinitesimal numbers, g > 0 is
infinitesimal and g < 0 is infinite.
"""
import math
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..utils.errors import NotFiniteError, ZeroLevelError
from .points import normalize_angle

Coefficient = Union[Fraction, float]
Scalar = Union[Fraction, float, int]


def to_exact(value) -> Fraction:
    """Coerce an int, string or Fraction into a Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not levels")
    if isinstance(value, (int, str)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    raise TypeError(f"Cannot use {value!r} as an exact rational")


def to_coefficient(value) -> Coefficient:
    """Ints and strings become exact; floats stay floats and must be finite"""
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"Coefficient {value} is not finite")
        return value
    return to_exact(value)


class Ordering(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


class Level(BaseModel):
    """Sim-class of a nonzero number, identified with its exponent g"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    g: Fraction

    @field_validator("g", mode="before")
    @classmethod
    def _exact(cls, value):
        return to_exact(value)

    @classmethod
    def of(cls, g) -> "Level":
        return cls.model_construct(g=to_exact(g))

    def dominates(self, other: "Level") -> bool:
        """True when this level has strictly larger magnitude"""
        return self.g < other.g

    @property
    def is_finite_class(self) -> bool:
        return self.g == 0


class LevelledNumber(BaseModel):
    """
    Canonical finite sum of coefficient * u^g terms

    terms are (g, coefficient) pairs, strictly increasing in g, coefficients
    nonzero. Arithmetic is exact when coefficients are Fractions.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    terms: tuple[tuple[Fraction, Coefficient], ...] = ()

    @field_validator("terms", mode="before")
    @classmethod
    def _canonicalize(cls, value):
        if isinstance(value, dict):
            value = value.items()
        merged: dict[Fraction, Coefficient] = {}
        for g, c in value:
            g = to_exact(g)
            merged[g] = merged.get(g, 0) + to_coefficient(c)
        return tuple((g, c) for g, c in sorted(merged.items()) if c != 0)

    @classmethod
    def _from_canonical(cls, terms: Iterable[tuple[Fraction, Coefficient]]) -> "LevelledNumber":
        return cls.model_construct(terms=tuple(terms))

    @classmethod
    def from_terms(cls, terms) -> "LevelledNumber":
        """Build from a mapping or iterable of (g, coefficient)"""
        return cls(terms=terms)

    @classmethod
    def zero(cls) -> "LevelledNumber":
        return cls._from_canonical(())

    @classmethod
    def constant(cls, c: Scalar) -> "LevelledNumber":
        return cls.monomial(c, 0)

    @classmethod
    def monomial(cls, c: Scalar, g) -> "LevelledNumber":
        c = to_coefficient(c)
        if c == 0:
            return cls.zero()
        return cls._from_canonical(((to_exact(g), c),))

    # --- inspection ---

    def is_zero(self) -> bool:
        return not self.terms

    def as_dict(self) -> dict[Fraction, Coefficient]:
        return dict(self.terms)

    def coefficient(self, level: Union[Level, Fraction, int, str]) -> Coefficient:
        """Coefficient at a level, 0 when the level is absent"""
        g = level.g if isinstance(level, Level) else to_exact(level)
        for term_g, c in self.terms:
            if term_g == g:
                return c
            if term_g > g:
                break
        return 0

    def leading_term(self) -> tuple[Level, Coefficient]:
        """Largest-magnitude term"""
        if not self.terms:
            raise ZeroLevelError("Zero has no leading term")
        g, c = self.terms[0]
        return Level.of(g), c

    def sim_class(self) -> Level:
        """Level of the number: the minimal exponent present"""
        if not self.terms:
            raise ZeroLevelError("Zero has no sim-class")
        return Level.of(self.terms[0][0])

    def is_finite(self) -> bool:
        return all(g >= 0 for g, _ in self.terms)

    def standard_part(self) -> Coefficient:
        """Coefficient at g = 0 for a finite number"""
        if not self.is_finite():
            raise NotFiniteError()
        return self.coefficient(0)

    def spectrum_function(self, level: Union[Level, Fraction, int, str]) -> Coefficient:
        """c_i if the level is in the spectrum, else 0"""
        return self.coefficient(level)

    # --- arithmetic ---

    def add(self, other: "LevelledNumber") -> "LevelledNumber":
        merged = dict(self.terms)
        for g, c in other.terms:
            merged[g] = merged.get(g, 0) + c
        return LevelledNumber._from_canonical(
            (g, c) for g, c in sorted(merged.items()) if c != 0
        )

    def negate(self) -> "LevelledNumber":
        return LevelledNumber._from_canonical((g, -c) for g, c in self.terms)

    def subtract(self, other: "LevelledNumber") -> "LevelledNumber":
        return self.add(other.negate())

    def scalar_mul(self, c: Scalar) -> "LevelledNumber":
        c = to_coefficient(c)
        if c == 0:
            return LevelledNumber.zero()
        return LevelledNumber._from_canonical(
            (g, c * coefficient) for g, coefficient in self.terms if c * coefficient != 0
        )

    def mul(self, other: "LevelledNumber") -> "LevelledNumber":
        """Convolution with level addition"""
        product: dict[Fraction, Coefficient] = {}
        for g1, c1 in self.terms:
            for g2, c2 in other.terms:
                g = g1 + g2
                product[g] = product.get(g, 0) + c1 * c2
        return LevelledNumber._from_canonical(
            (g, c) for g, c in sorted(product.items()) if c != 0
        )

    def compare(self, other: "LevelledNumber") -> Ordering:
        """Sign of self - other, read off its leading coefficient"""
        difference = self.subtract(other)
        if difference.is_zero():
            return Ordering.EQUAL
        return Ordering.GREATER if difference.terms[0][1] > 0 else Ordering.LESS

    def __add__(self, other: "LevelledNumber") -> "LevelledNumber":
        return self.add(other)

    def __sub__(self, other: "LevelledNumber") -> "LevelledNumber":
        return self.subtract(other)

    def __neg__(self) -> "LevelledNumber":
        return self.negate()

    def __mul__(self, other):
        if isinstance(other, LevelledNumber):
            return self.mul(other)
        return self.scalar_mul(other)

    __rmul__ = __mul__

    def __lt__(self, other: "LevelledNumber") -> bool:
        return self.compare(other) is Ordering.LESS

    def __str__(self) -> str:
        from ..data.expression_parser import format_levelled

        return format_levelled(self)


class SpectrumEntry(BaseModel):
    """One (coefficient, level) pair of a decomposition"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coefficient: Coefficient
    level: Level

    @field_validator("coefficient", mode="before")
    @classmethod
    def _nonzero(cls, value):
        value = to_coefficient(value)
        if value == 0:
            raise ValueError("Spectrum coefficients must be nonzero")
        return value


class Spectrum(BaseModel):
    """
    Ordered (coefficient, level) pairs, levels strictly decreasing in magnitude

    The empty spectrum represents zero.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    entries: tuple[SpectrumEntry, ...] = ()

    @model_validator(mode="after")
    def _strict_descent(self):
        levels = [entry.level.g for entry in self.entries]
        if any(a >= b for a, b in zip(levels, levels[1:])):
            raise ValueError(f"Spectrum levels {levels} are not strictly increasing in g")
        return self

    @classmethod
    def _from_canonical(cls, entries: Iterable[SpectrumEntry]) -> "Spectrum":
        return cls.model_construct(entries=tuple(entries))

    def pairs(self) -> list[tuple[Coefficient, Fraction]]:
        return [(entry.coefficient, entry.level.g) for entry in self.entries]

    def __len__(self) -> int:
        return len(self.entries)


class CircleLevelled(BaseModel):
    """
    Element of the nonstandard circle: a standard angle plus an infinitesimal tail

    top is taken mod 2*pi with 0 and 2*pi identified.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    top: float = Field(0.0, allow_inf_nan=False, description="Radians, level g = 0")
    tail: LevelledNumber = Field(default_factory=LevelledNumber.zero)

    @field_validator("top")
    @classmethod
    def _normalize_top(cls, value: float) -> float:
        return normalize_angle(value)

    @field_validator("tail")
    @classmethod
    def _infinitesimal_tail(cls, value: LevelledNumber) -> LevelledNumber:
        if any(g <= 0 for g, _ in value.terms):
            raise ValueError("Circle tail must contain only infinitesimal levels (g > 0)")
        return value
