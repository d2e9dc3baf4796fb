"""
Exact separation metric on the profile spaces C, D and F
"""
import logging
from fractions import Fraction
from typing import Optional

from ..models.levelled import to_exact
from ..models.profiles import Profile, ProfileC, ProfileF, SeparationResult
from ..utils.errors import DepthRangeError, ProfileKindError

logger = logging.getLogger(__name__)


class TreeMetric:
    """
    Distances, prefixes and geodesics in the profile trees

    Two profiles agree up to their moment of separation c and the distance is
    (depth1 - c) + (depth2 - c). All arithmetic is in Fractions.
    """

    @staticmethod
    def _check_kinds(*profiles: Profile) -> None:
        kinds = {type(p) for p in profiles}
        if len(kinds) > 1:
            names = sorted(p.kind.value for p in profiles)
            raise ProfileKindError(f"Cannot compare profiles of different spaces {names}")

    @staticmethod
    def _separation_pl(alpha: ProfileC, beta: ProfileC, limit: Fraction) -> Fraction:
        xs = sorted(
            {x for x, _ in alpha.breakpoints if x <= limit}
            | {x for x, _ in beta.breakpoints if x <= limit}
            | {limit}
        )
        # both are linear on each merged interval and agree at x = 0
        for left, right in zip(xs, xs[1:]):
            if alpha.value_at(right) != beta.value_at(right):
                return left
        return limit

    @staticmethod
    def _separation_support(alpha, beta, limit: Fraction) -> Fraction:
        if isinstance(alpha, ProfileF) and alpha.top != beta.top:
            return Fraction(0)
        points = sorted({x for x, _ in alpha.support} | {x for x, _ in beta.support})
        for x in points:
            if x > limit:
                break
            if alpha.value_at(x) != beta.value_at(x):
                return x
        return limit

    @staticmethod
    def separation(alpha: Profile, beta: Profile) -> SeparationResult:
        """
        Moment of separation: how deep the two profiles agree

        Args:
            alpha: First profile
            beta: Second profile of the same space

        Returns:
            SeparationResult with 0 <= c <= min(depths)

        Raises:
            ProfileKindError: profiles from different spaces
        """
        TreeMetric._check_kinds(alpha, beta)
        limit = min(alpha.depth, beta.depth)
        if isinstance(alpha, ProfileC):
            c = TreeMetric._separation_pl(alpha, beta, limit)
        else:
            c = TreeMetric._separation_support(alpha, beta, limit)
        return SeparationResult.model_construct(c=c)

    @staticmethod
    def distance(alpha: Profile, beta: Profile) -> Fraction:
        """(depth1 - c) + (depth2 - c)"""
        c = TreeMetric.separation(alpha, beta).c
        return (alpha.depth - c) + (beta.depth - c)

    @staticmethod
    def same_point(alpha: Profile, beta: Profile) -> bool:
        """True when the profiles are at distance 0"""
        return TreeMetric.distance(alpha, beta) == 0

    @staticmethod
    def basepoint_like(alpha: Profile) -> Profile:
        return type(alpha).basepoint()

    @staticmethod
    def gromov_product(alpha: Profile, beta: Profile, base: Optional[Profile] = None) -> Fraction:
        """
        (alpha | beta)_base = 1/2 (d(base, alpha) + d(base, beta) - d(alpha, beta))

        With the default basepoint this equals the moment of separation.
        """
        if base is None:
            base = TreeMetric.basepoint_like(alpha)
        TreeMetric._check_kinds(alpha, beta, base)
        return (
            TreeMetric.distance(base, alpha)
            + TreeMetric.distance(base, beta)
            - TreeMetric.distance(alpha, beta)
        ) / 2

    @staticmethod
    def restrict(alpha: Profile, s) -> Profile:
        """
        Prefix of alpha of depth s

        Raises:
            DepthRangeError: s outside [0, depth]
        """
        s = to_exact(s)
        if not (0 <= s <= alpha.depth):
            raise DepthRangeError(f"Cannot restrict a profile of depth {alpha.depth} to {s}")
        if s == alpha.depth:
            return alpha
        return alpha.truncated(s)

    @staticmethod
    def branch_point(alpha: Profile, beta: Profile) -> Profile:
        """Vertex where the paths from the basepoint to alpha and beta part"""
        c = TreeMetric.separation(alpha, beta).c
        return TreeMetric.restrict(alpha, c)

    @staticmethod
    def geodesic(alpha: Profile, beta: Profile, t) -> Profile:
        """
        Point at distance t from alpha on the path to beta

        The path climbs alpha back to the branch point, then descends along beta.

        Raises:
            DepthRangeError: t outside [0, distance(alpha, beta)]
        """
        t = to_exact(t)
        h = TreeMetric.separation(alpha, beta).c
        total = (alpha.depth - h) + (beta.depth - h)
        if not (0 <= t <= total):
            raise DepthRangeError(f"Path parameter {t} outside [0, {total}]")
        if t <= alpha.depth - h:
            return TreeMetric.restrict(alpha, alpha.depth - t)
        return TreeMetric.restrict(beta, beta.depth - (total - t))

    @staticmethod
    def four_point_check(w: Profile, x: Profile, y: Profile, z: Profile) -> bool:
        """d(w,x) + d(y,z) <= max(d(w,y) + d(x,z), d(w,z) + d(x,y)), exactly"""
        TreeMetric._check_kinds(w, x, y, z)
        d = TreeMetric.distance
        holds = d(w, x) + d(y, z) <= max(d(w, y) + d(x, z), d(w, z) + d(x, y))
        if not holds:
            logger.debug(f"Four-point condition fails for depths {[p.depth for p in (w, x, y, z)]}")
        return holds
