"""
Points of the Lobachevsky plane in unit-disk and polar form
"""
import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..utils.errors import HyperbolicDomainError

TWO_PI = 2 * math.pi

# Angular offset of a depth-g level at scale n is e^{-ANGULAR_DECAY_RATE * n * g}.
# Circles of radius rho have length ~ e^{2 rho} for the metric artanh(A).
ANGULAR_DECAY_RATE = 2


def normalize_angle(phi: float) -> float:
    """Reduce an angle into [0, 2*pi)"""
    reduced = math.fmod(phi, TWO_PI)
    if reduced < 0:
        reduced += TWO_PI
    if reduced >= TWO_PI:
        reduced = 0.0
    return reduced


class DiskPoint(BaseModel):
    """
    Point of the unit disk |z| < 1

    log_gap stores log(1 - |z|^2). Points produced from polar coordinates keep
    it exactly, so points far from the origin stay distinguishable even when
    re/im round to the boundary.
    """

    model_config = ConfigDict(frozen=True)

    re: float
    im: float
    log_gap: Optional[float] = Field(None, le=0, description="log(1 - |z|^2)")

    @model_validator(mode="after")
    def _check_inside(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise HyperbolicDomainError(f"Non-finite disk coordinates ({self.re}, {self.im})")
        if self.log_gap is None:
            r = math.hypot(self.re, self.im)
            if r >= 1:
                raise HyperbolicDomainError(f"Point ({self.re}, {self.im}) has modulus {r} >= 1")
            object.__setattr__(self, "log_gap", math.log1p(-r) + math.log1p(r))
        elif not math.isfinite(self.log_gap):
            raise HyperbolicDomainError("Boundary gap must be finite")
        return self

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)


class PolarPoint(BaseModel):
    """
    Point (rho, phi): hyperbolic distance from the origin and polar angle

    tail holds angular offsets too small for a float angle, as pairs
    (coefficient, decay) meaning phi + sum(coefficient * e^{-decay}).
    """

    model_config = ConfigDict(frozen=True)

    rho: float = Field(..., ge=0, description="Hyperbolic length")
    phi: float = Field(0.0, description="Polar angle in radians")
    tail: tuple[tuple[float, float], ...] = ()

    @field_validator("phi")
    @classmethod
    def _normalize_phi(cls, value: float) -> float:
        if not math.isfinite(value):
            raise HyperbolicDomainError(f"Non-finite angle {value}")
        return normalize_angle(value)

    @field_validator("tail")
    @classmethod
    def _merge_tail(cls, value):
        merged: dict[float, float] = {}
        for coefficient, decay in value:
            if not (math.isfinite(coefficient) and math.isfinite(decay)) or decay < 0:
                raise HyperbolicDomainError(f"Invalid angular term ({coefficient}, {decay})")
            merged[decay] = merged.get(decay, 0.0) + coefficient
        return tuple((c, k) for k, c in sorted(merged.items()) if c != 0)

    @model_validator(mode="after")
    def _collapse_origin(self):
        if not math.isfinite(self.rho):
            raise HyperbolicDomainError(f"Non-finite radius {self.rho}")
        # every angle names the same point at the origin
        if self.rho == 0 and (self.phi != 0 or self.tail):
            object.__setattr__(self, "phi", 0.0)
            object.__setattr__(self, "tail", ())
        return self

    def sort_key(self) -> tuple:
        return (self.rho, self.phi, self.tail)


class AsymptoticParams(BaseModel):
    """
    Scaled configuration rho1 = N*R1, rho2 = N*R2 with angular offset at level cap_phi

    The angular offset is e^{-ANGULAR_DECAY_RATE * N * cap_phi}; it is carried
    in log form and never materialized as a float.
    """

    model_config = ConfigDict(frozen=True)

    r1: float = Field(..., ge=0, allow_inf_nan=False)
    r2: float = Field(..., ge=0, allow_inf_nan=False)
    cap_phi: float = Field(..., ge=0, allow_inf_nan=False)
    n: float = Field(..., ge=1, allow_inf_nan=False)

    def realize(self) -> tuple[PolarPoint, PolarPoint]:
        """Return x1 = (N*R1, 0) and x2 = (N*R2, e^{-2*N*Phi})"""
        x1 = PolarPoint(rho=self.n * self.r1, phi=0.0)
        x2 = PolarPoint(
            rho=self.n * self.r2,
            phi=0.0,
            tail=((1.0, ANGULAR_DECAY_RATE * self.n * self.cap_phi),),
        )
        return x1, x2
