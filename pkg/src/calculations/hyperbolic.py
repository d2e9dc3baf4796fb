"""
Lobachevsky plane distances with log-domain evaluation
"""
import math
from typing import NamedTuple, Union

import numpy as np
from scipy.special import logsumexp

from ..models.points import AsymptoticParams, DiskPoint, PolarPoint, TWO_PI
from ..utils.errors import HyperbolicDomainError

LOG_ZERO = float("-inf")
LOG_2 = math.log(2.0)
LOG_8 = math.log(8.0)

# below this log|dphi| the half-angle sine is dphi/2 to double precision
SMALL_ANGLE_LOG = -20.0
# above this x, sinh(x) is e^x/2 times a correction evaluated with log1p
SINH_SWITCH = 20.0

Real = Union[int, float]


class HalfAngle(NamedTuple):
    """log|sin(dphi/2)| and log|cos(dphi/2)| of an angular difference"""

    log_sin: float
    log_cos: float


def _log_abs(x: float) -> float:
    return math.log(abs(x)) if x != 0 else LOG_ZERO


def log_sinh(x: float) -> float:
    """log(sinh(x)) for x >= 0, with log(sinh(0)) = -inf"""
    if x == 0:
        return LOG_ZERO
    if x < SINH_SWITCH:
        return math.log(math.sinh(x))
    return x - LOG_2 + math.log1p(-math.exp(-2.0 * x))


def softplus(x: float) -> float:
    """log(1 + e^x)"""
    return float(np.logaddexp(0.0, x))


class HyperbolicCalculator:
    """Distances in the Lobachevsky plane realized as the unit disk"""

    @staticmethod
    def disk_distance(z1: DiskPoint, z2: DiskPoint) -> float:
        """
        Distance 1/2 log((1+A)/(1-A)) with A = |(z1 - z2)/(z1 conj(z2) - 1)|

        Uses |1 - z1 conj(z2)|^2 = |z1 - z2|^2 + (1 - |z1|^2)(1 - |z2|^2), so
        1 - A^2 is formed from the stored boundary gaps without cancellation.

        Args:
            z1: First disk point
            z2: Second disk point

        Returns:
            Hyperbolic distance (>= 0)
        """
        if z1 == z2:
            return 0.0
        separation = abs(z1.z - z2.z)
        if separation == 0:
            return 0.0
        log_sep2 = 2.0 * math.log(separation)
        log_gaps = z1.log_gap + z2.log_gap
        # log(1/(1 - A^2)) = log(1 + |z1 - z2|^2 / gaps)
        log_inv_cogap = softplus(log_sep2 - log_gaps)
        log_a = 0.5 * (log_sep2 - log_gaps) - 0.5 * log_inv_cogap
        return math.log1p(math.exp(log_a)) + 0.5 * log_inv_cogap

    @staticmethod
    def polar_to_disk(p: PolarPoint) -> DiskPoint:
        """
        Disk point at hyperbolic distance rho from the origin along angle phi

        The radius is tanh(rho); the gap 1 - tanh^2(rho) = 4 e^{-2 rho} / (1 + e^{-2 rho})^2
        is recorded in log form.
        """
        if not math.isfinite(p.rho):
            raise HyperbolicDomainError(f"Non-finite radius {p.rho}")
        r = math.tanh(p.rho)
        log_gap = math.log(4.0) - 2.0 * p.rho - 2.0 * math.log1p(math.exp(-2.0 * p.rho))
        log_gap = min(log_gap, 0.0)
        return DiskPoint(re=r * math.cos(p.phi), im=r * math.sin(p.phi), log_gap=log_gap)

    @staticmethod
    def half_angle(p1: PolarPoint, p2: PolarPoint) -> HalfAngle:
        """
        Half-angle logs of phi1 - phi2, including sub-resolution tail terms

        Tail terms are combined with the principal difference by a signed
        log-sum-exp, so offsets far below float resolution keep their size.
        """
        principal = math.remainder(p1.phi - p2.phi, TWO_PI)
        if not p1.tail and not p2.tail:
            return HyperbolicCalculator._half_angle_from_float(principal)

        coefficients: dict[float, float] = {}
        for c, k in p1.tail:
            coefficients[k] = coefficients.get(k, 0.0) + c
        for c, k in p2.tail:
            coefficients[k] = coefficients.get(k, 0.0) - c
        exponents = [0.0] + [-k for k in coefficients]
        weights = [principal] + list(coefficients.values())
        nonzero = [(a, b) for a, b in zip(exponents, weights) if b != 0]
        if not nonzero:
            return HalfAngle(LOG_ZERO, 0.0)

        a, b = zip(*nonzero)
        with np.errstate(divide="ignore"):
            log_delta, sign = logsumexp(np.array(a), b=np.array(b), return_sign=True)
        log_delta = float(log_delta)
        if sign == 0 or not math.isfinite(log_delta):
            return HalfAngle(LOG_ZERO, 0.0)
        if log_delta < SMALL_ANGLE_LOG:
            log_sin = log_delta - LOG_2
            return HalfAngle(log_sin, 0.5 * math.log1p(-math.exp(2.0 * log_sin)))
        return HyperbolicCalculator._half_angle_from_float(float(sign) * math.exp(log_delta))

    @staticmethod
    def _half_angle_from_float(delta: float) -> HalfAngle:
        half = 0.5 * delta
        return HalfAngle(_log_abs(math.sin(half)), _log_abs(math.cos(half)))

    @staticmethod
    def _log_excess(p1: PolarPoint, p2: PolarPoint) -> float:
        """
        log((B - 8)/8) = log(cos^2(dphi/2) sinh^2(rho1 - rho2) + sin^2(dphi/2) sinh^2(rho1 + rho2))
        """
        angle = HyperbolicCalculator.half_angle(p1, p2)
        radial = 2.0 * (angle.log_cos + log_sinh(abs(p1.rho - p2.rho)))
        angular = 2.0 * (angle.log_sin + log_sinh(p1.rho + p2.rho))
        return float(np.logaddexp(radial, angular))

    @staticmethod
    def _canonical_pair(p1: PolarPoint, p2: PolarPoint) -> tuple[PolarPoint, PolarPoint]:
        if p2.sort_key() < p1.sort_key():
            return p2, p1
        return p1, p2

    @staticmethod
    def polar_distance(p1: PolarPoint, p2: PolarPoint) -> float:
        """
        Distance between polar points, evaluated entirely in log-domain

        With 1 - A^2 = 8/B the distance is 1/2 log((1+A)^2 B / 8); log(B/8) is
        softplus of the log excess and A = exp(1/2 (log excess - log(B/8))).
        Never forms e^{rho1 + rho2}, so rho up to 1e5 is fine.

        Args:
            p1: First point
            p2: Second point

        Returns:
            Hyperbolic distance (>= 0), exactly symmetric
        """
        if p1 == p2:
            return 0.0
        p1, p2 = HyperbolicCalculator._canonical_pair(p1, p2)
        log_excess = HyperbolicCalculator._log_excess(p1, p2)
        if log_excess == LOG_ZERO:
            return 0.0
        log_b_over_8 = softplus(log_excess)
        log_a = 0.5 * (log_excess - log_b_over_8)
        return math.log1p(math.exp(log_a)) + 0.5 * log_b_over_8

    @staticmethod
    def log_b(p1: PolarPoint, p2: PolarPoint) -> float:
        """
        log B for B = (2 - eps^2)(t + 1/t)^2 + eps^2 (s + 1/s)^2

        s = e^{rho1 + rho2}, t = e^{rho1 - rho2}, eps^2 = 2 sin^2(dphi/2); the six
        expanded exponential terms are summed by log-sum-exp.
        """
        p1, p2 = HyperbolicCalculator._canonical_pair(p1, p2)
        angle = HyperbolicCalculator.half_angle(p1, p2)
        delta = abs(p1.rho - p2.rho)
        sigma = p1.rho + p2.rho
        log_radial_weight = LOG_2 + 2.0 * angle.log_cos
        log_angular_weight = LOG_2 + 2.0 * angle.log_sin
        terms = [
            log_radial_weight + 2.0 * delta,
            log_radial_weight + LOG_2,
            log_radial_weight - 2.0 * delta,
            log_angular_weight + 2.0 * sigma,
            log_angular_weight + LOG_2,
            log_angular_weight - 2.0 * sigma,
        ]
        with np.errstate(divide="ignore"):
            return float(logsumexp(np.array(terms)))

    @staticmethod
    def leading_order_distance(p1: PolarPoint, p2: PolarPoint) -> float:
        """
        Leading-order form 1/2 log(e^{2|rho1 - rho2|} + sin^2(dphi/2) e^{2(rho1 + rho2)})

        Differs from polar_distance by O(1) uniformly; after 1/N scaling both
        share the same limit.
        """
        p1, p2 = HyperbolicCalculator._canonical_pair(p1, p2)
        angle = HyperbolicCalculator.half_angle(p1, p2)
        radial = 2.0 * abs(p1.rho - p2.rho)
        angular = 2.0 * (angle.log_sin + p1.rho + p2.rho)
        return 0.5 * float(np.logaddexp(radial, angular))

    @staticmethod
    def scaled_distance(p1: PolarPoint, p2: PolarPoint, inv_n: float) -> float:
        """Rescaled distance inv_n * d(p1, p2), inv_n in (0, 1]"""
        if not (0 < inv_n <= 1):
            raise HyperbolicDomainError(f"Scale factor {inv_n} not in (0, 1]")
        return inv_n * HyperbolicCalculator.polar_distance(p1, p2)

    @staticmethod
    def tree_limit_estimate(r1: Real, r2: Real, cap_phi: Real) -> Real:
        """max(|R1 - R2|, R1 + R2 - 2*Phi)"""
        return max(abs(r1 - r2), r1 + r2 - 2 * cap_phi)

    @staticmethod
    def convergence_error(params: AsymptoticParams) -> float:
        """
        Gap between the rescaled distance and its tree limit

        Returns:
            |d(x1, x2)/N - max(|R1 - R2|, R1 + R2 - 2*Phi)|
        """
        x1, x2 = params.realize()
        scaled = HyperbolicCalculator.polar_distance(x1, x2) / params.n
        limit = HyperbolicCalculator.tree_limit_estimate(params.r1, params.r2, params.cap_phi)
        return abs(scaled - limit)
