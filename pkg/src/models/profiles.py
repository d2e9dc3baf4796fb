"""
Tree profiles: points of the separation-metric spaces C, D and F

A profile is a function on the depth interval [0, depth]. D profiles are zero
except at finitely many depths, F profiles add an angle at depth 0, C profiles
are continuous piecewise-linear with f(0) = 0.
"""
from enum import Enum
from fractions import Fraction
from typing import ClassVar, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .levelled import Coefficient, to_coefficient, to_exact
from .points import normalize_angle


class ProfileKind(str, Enum):
    D = "D"
    C = "C"
    F = "F"


def _exact_nonnegative(value) -> Fraction:
    value = to_exact(value)
    if value < 0:
        raise ValueError(f"Depth {value} is negative")
    return value


def _canonical_support(value) -> tuple[tuple[Fraction, Coefficient], ...]:
    if isinstance(value, dict):
        value = value.items()
    support: dict[Fraction, Coefficient] = {}
    for x, c in value:
        x = to_exact(x)
        if x in support:
            raise ValueError(f"Depth {x} appears twice in the support")
        c = to_coefficient(c)
        if c == 0:
            raise ValueError(f"Support value at depth {x} is zero")
        support[x] = c
    return tuple(sorted(support.items()))


class _SupportProfile(BaseModel):
    """Shared shape of D and F: a depth plus finitely many nonzero values"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    depth: Fraction = Field(..., description="Length of the profile")
    support: tuple[tuple[Fraction, Coefficient], ...] = ()

    @field_validator("depth", mode="before")
    @classmethod
    def _exact_depth(cls, value):
        return _exact_nonnegative(value)

    @field_validator("support", mode="before")
    @classmethod
    def _exact_support(cls, value):
        return _canonical_support(value)

    @model_validator(mode="after")
    def _support_in_range(self):
        for x, _ in self.support:
            if not (0 < x <= self.depth):
                raise ValueError(f"Support point {x} outside (0, {self.depth}]")
        return self

    def value_at(self, x: Fraction) -> Coefficient:
        for point, c in self.support:
            if point == x:
                return c
        return 0

    def _support_through(self, s: Fraction) -> tuple[tuple[Fraction, Coefficient], ...]:
        return tuple((x, c) for x, c in self.support if x <= s)

    def _support_before(self, s: Fraction) -> tuple[tuple[Fraction, Coefficient], ...]:
        return tuple((x, c) for x, c in self.support if x < s)


class ProfileD(_SupportProfile):
    """Finitely supported profile (f, depth) of space D"""

    kind: ClassVar[ProfileKind] = ProfileKind.D

    @classmethod
    def basepoint(cls) -> "ProfileD":
        return cls.model_construct(depth=Fraction(0), support=())

    def truncated(self, s: Fraction) -> "ProfileD":
        return ProfileD.model_construct(depth=s, support=self._support_through(s))

    def canonical(self) -> "ProfileD":
        """Drop the value at the terminal depth, which no distance can see"""
        return ProfileD.model_construct(depth=self.depth, support=self._support_before(self.depth))


class ProfileF(_SupportProfile):
    """Circle-topped finitely supported profile of space F"""

    kind: ClassVar[ProfileKind] = ProfileKind.F

    top: float = Field(0.0, allow_inf_nan=False, description="Angle at depth 0, radians in [0, 2*pi)")

    @field_validator("top")
    @classmethod
    def _normalize_top(cls, value: float) -> float:
        return normalize_angle(value)

    @classmethod
    def basepoint(cls, top: float = 0.0) -> "ProfileF":
        return cls(depth=0, top=top)

    def truncated(self, s: Fraction) -> "ProfileF":
        return ProfileF.model_construct(depth=s, top=self.top, support=self._support_through(s))

    def canonical(self) -> "ProfileF":
        """Drop tip data; at depth 0 the top angle is tip data too"""
        top = self.top if self.depth > 0 else 0.0
        return ProfileF.model_construct(
            depth=self.depth, top=top, support=self._support_before(self.depth)
        )


class ProfileC(BaseModel):
    """
    Continuous piecewise-linear profile of space C

    breakpoints run from (0, 0) to (depth, f(depth)) with strictly increasing x;
    f is linear between consecutive breakpoints. Everything is exact.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: ClassVar[ProfileKind] = ProfileKind.C

    depth: Fraction
    breakpoints: tuple[tuple[Fraction, Fraction], ...] = ((Fraction(0), Fraction(0)),)

    @field_validator("depth", mode="before")
    @classmethod
    def _exact_depth(cls, value):
        return _exact_nonnegative(value)

    @field_validator("breakpoints", mode="before")
    @classmethod
    def _exact_breakpoints(cls, value):
        if isinstance(value, dict):
            value = value.items()
        return tuple((to_exact(x), to_exact(y)) for x, y in value)

    @model_validator(mode="after")
    def _check_shape(self):
        points = self.breakpoints
        if not points or points[0] != (0, 0):
            raise ValueError("First breakpoint must be (0, 0)")
        xs = [x for x, _ in points]
        if any(a >= b for a, b in zip(xs, xs[1:])):
            raise ValueError(f"Breakpoint depths {xs} are not strictly increasing")
        if xs[-1] != self.depth:
            raise ValueError(f"Last breakpoint {xs[-1]} differs from depth {self.depth}")
        return self

    @classmethod
    def basepoint(cls) -> "ProfileC":
        return cls.model_construct(depth=Fraction(0), breakpoints=((Fraction(0), Fraction(0)),))

    def value_at(self, x: Fraction) -> Fraction:
        """Linear interpolation; x must lie in [0, depth]"""
        points = self.breakpoints
        for (x0, y0), (x1, y1) in zip(points, points[1:]):
            if x0 <= x <= x1:
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        return points[-1][1]

    def truncated(self, s: Fraction) -> "ProfileC":
        if s == 0:
            return ProfileC.basepoint()
        kept = [(x, y) for x, y in self.breakpoints if x < s]
        kept.append((s, self.value_at(s)))
        return ProfileC.model_construct(depth=s, breakpoints=tuple(kept))

    def canonical(self) -> "ProfileC":
        """Remove interior breakpoints where the slope does not change"""
        points = list(self.breakpoints)
        kept = [points[0]]
        for middle, nxt in zip(points[1:], points[2:]):
            (x0, y0) = kept[-1]
            (x1, y1), (x2, y2) = middle, nxt
            if (y1 - y0) * (x2 - x1) != (y2 - y1) * (x1 - x0):
                kept.append(middle)
        if len(points) > 1:
            kept.append(points[-1])
        return ProfileC.model_construct(depth=self.depth, breakpoints=tuple(kept))


Profile = Union[ProfileC, ProfileD, ProfileF]


class SeparationResult(BaseModel):
    """Moment of separation c of two profiles, 0 <= c <= min depth"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    c: Fraction

    @field_validator("c", mode="before")
    @classmethod
    def _exact(cls, value):
        return _exact_nonnegative(value)
