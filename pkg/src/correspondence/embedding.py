"""
Realizing F-profiles as hyperbolic points at a finite scale

A profile (top, support, depth) becomes the point at radius n * depth whose
angle is top + sum(c * e^{-2 n g}) over the support. Rescaled hyperbolic
distance between realizations tends to the tree distance as n grows.
"""
import logging
import math
from enum import Enum
from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from ..calculations.hyperbolic import HyperbolicCalculator
from ..calculations.tree_metric import TreeMetric
from ..models.levelled import CircleLevelled, LevelledNumber
from ..models.points import ANGULAR_DECAY_RATE, PolarPoint, normalize_angle
from ..models.profiles import ProfileF
from ..models.report import ConvergenceRow
from ..utils.errors import AdmissibilityError

logger = logging.getLogger(__name__)


class LimitCase(str, Enum):
    """Where the first differing level falls relative to the two depths (short, long)"""

    WITHIN_BOTH = "within_both"
    WITHIN_LONGER = "within_longer"
    BEYOND_BOTH = "beyond_both"


class Realization(BaseModel):
    """Hyperbolic point standing for a profile at scale n"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    point: PolarPoint
    n: float = Field(..., ge=1)
    source: ProfileF

    @property
    def principal_angle(self) -> float:
        """The angle as a float; tail terms below resolution vanish here"""
        angle = self.point.phi + sum(c * math.exp(-k) for c, k in self.point.tail)
        return normalize_angle(angle)

    def symbolic_angle(self) -> CircleLevelled:
        """
        The angle with e^{-2n} kept as the formal infinitesimal u

        circle_decompose of the result returns the source's top and support.
        """
        return CircleLevelled(
            top=self.source.top,
            tail=LevelledNumber.from_terms((g, c) for g, c in self.source.support),
        )


class ProfileEmbedding:
    """Maps F-profiles into the hyperbolic plane and compares both metrics"""

    @staticmethod
    def check_admissible(profile: ProfileF) -> None:
        """
        Raises:
            AdmissibilityError: a support value outside (-pi, pi)
        """
        for g, c in profile.support:
            if not (-math.pi < c < math.pi):
                raise AdmissibilityError(
                    f"Support value {c} at depth {g} is outside (-pi, pi)"
                )

    @staticmethod
    def realize_at_scale(profile: ProfileF, n: float) -> Realization:
        """
        Point (n * depth, top + sum(c * e^{-2 n g}))

        Args:
            profile: F-profile with support values in (-pi, pi)
            n: Scale, n >= 1

        Returns:
            Realization carrying the point and its source
        """
        if not n >= 1:
            raise AdmissibilityError(f"Scale {n} must be >= 1")
        ProfileEmbedding.check_admissible(profile)
        tail = tuple(
            (float(c), ANGULAR_DECAY_RATE * n * float(g)) for g, c in profile.support
        )
        point = PolarPoint(rho=n * float(profile.depth), phi=profile.top, tail=tail)
        return Realization(point=point, n=n, source=profile)

    @staticmethod
    def pair_error(
        p1: ProfileF,
        p2: ProfileF,
        n: float,
        pair: str = "0-1",
    ) -> ConvergenceRow:
        """
        Compare d(x1, x2)/n with the tree distance of the source profiles

        Args:
            p1: First profile
            p2: Second profile
            n: Scale
            pair: Label written to the row

        Returns:
            ConvergenceRow with error = |hyper_scaled - tree_delta|
        """
        tree_delta = TreeMetric.distance(p1, p2)
        r1 = ProfileEmbedding.realize_at_scale(p1, n)
        r2 = ProfileEmbedding.realize_at_scale(p2, n)
        hyper_scaled = HyperbolicCalculator.scaled_distance(r1.point, r2.point, 1.0 / n)
        error = abs(hyper_scaled - float(tree_delta))
        logger.debug(
            f"Pair {pair} at n={n}: angles {r1.principal_angle:.6f} / {r2.principal_angle:.6f}, "
            f"tree {tree_delta}, hyperbolic {hyper_scaled:.6f}"
        )
        return ConvergenceRow(
            pair=pair, n=n, tree_delta=tree_delta, hyper_scaled=hyper_scaled, error=error
        )

    @staticmethod
    def first_difference(p1: ProfileF, p2: ProfileF) -> Optional[Fraction]:
        """
        First level where the profiles differ, ignoring both depths

        Returns:
            0 for different tops, None if the profiles never differ
        """
        if p1.top != p2.top:
            return Fraction(0)
        points = sorted({g for g, _ in p1.support} | {g for g, _ in p2.support})
        for g in points:
            if p1.value_at(g) != p2.value_at(g):
                return g
        return None

    @staticmethod
    def analytic_limit(p1: ProfileF, p2: ProfileF) -> Fraction:
        """
        max(|l1 - l2|, l1 + l2 - 2 g) with g the first differing level

        This is the n -> infinity limit of the rescaled hyperbolic distance.
        """
        radial = abs(p1.depth - p2.depth)
        g = ProfileEmbedding.first_difference(p1, p2)
        if g is None:
            return radial
        return max(radial, p1.depth + p2.depth - 2 * g)

    @staticmethod
    def limit_case(p1: ProfileF, p2: ProfileF) -> LimitCase:
        """Classify g against l_short <= l_long"""
        short, long = sorted((p1.depth, p2.depth))
        g = ProfileEmbedding.first_difference(p1, p2)
        if g is not None and g <= short:
            return LimitCase.WITHIN_BOTH
        if g is not None and g <= long:
            return LimitCase.WITHIN_LONGER
        return LimitCase.BEYOND_BOTH
