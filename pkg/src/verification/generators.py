"""
Seeded random instances for the property suites

Depths live on a grid of step 1/10 up to 3 so that distances are exact and
random profiles share prefixes often enough to exercise the tree structure.
"""
import math
from fractions import Fraction
from typing import Optional

import numpy as np

from ..models.levelled import Level, LevelledNumber, Spectrum, SpectrumEntry
from ..models.points import PolarPoint
from ..models.profiles import Profile, ProfileC, ProfileD, ProfileF, ProfileKind

GRID = Fraction(1, 10)
MAX_GRID_STEPS = 30
MAX_SUPPORT = 5

# angles offered to F-profiles; few of them, so tops collide
TOP_CHOICES = (0.8, 2.0, 4.5)

# admissible coefficients for realizations
MIN_COEFFICIENT = 0.1
MAX_COEFFICIENT = math.pi - 0.1
# pairs whose leading angular gap |dc| is near 2 have log(|dc|/2) ~ 0, so the
# 1/n term is dominated by higher order terms and the error is not monotone in n
DEGENERATE_GAP = (1.81, 2.21)
MAX_TOP_SINE = 0.9
MIN_TOP_GAP = 0.1
SHARED_TOP = 0.8

LEVEL_DENOMINATORS = (1, 2, 3, 4)


def random_depth(rng: np.random.Generator, low: Fraction = Fraction(0)) -> Fraction:
    """Grid depth in [low, 3]"""
    start = int(low / GRID)
    return GRID * int(rng.integers(start, MAX_GRID_STEPS + 1))


def _grid_points(rng: np.random.Generator, low: Fraction, high: Fraction, count: int) -> list[Fraction]:
    """Up to count distinct grid points in (low, high]"""
    first = int(low / GRID) + 1
    last = int(high / GRID)
    if last < first or count <= 0:
        return []
    available = last - first + 1
    steps = rng.choice(available, size=min(count, available), replace=False)
    return sorted(GRID * (first + int(k)) for k in steps)


def _exact_value(rng: np.random.Generator) -> Fraction:
    value = int(rng.integers(1, 4))
    return Fraction(value if rng.random() < 0.5 else -value)


def _angle_value(rng: np.random.Generator) -> float:
    magnitude = float(rng.uniform(MIN_COEFFICIENT, MAX_COEFFICIENT))
    return magnitude if rng.random() < 0.5 else -magnitude


def random_profile(rng: np.random.Generator, kind: ProfileKind) -> Profile:
    """A fresh profile of the given space"""
    depth = random_depth(rng)
    if kind is ProfileKind.C:
        xs = _grid_points(rng, Fraction(0), depth, int(rng.integers(0, MAX_SUPPORT)))
        if not xs or xs[-1] != depth:
            xs = [x for x in xs if x < depth] + ([depth] if depth > 0 else [])
        points = [(Fraction(0), Fraction(0))] + [(x, Fraction(int(rng.integers(-2, 3)))) for x in xs]
        return ProfileC(depth=depth, breakpoints=points)
    count = int(rng.integers(0, MAX_SUPPORT + 1))
    points = _grid_points(rng, Fraction(0), depth, count)
    if kind is ProfileKind.D:
        return ProfileD(depth=depth, support=[(x, _exact_value(rng)) for x in points])
    top = TOP_CHOICES[int(rng.integers(len(TOP_CHOICES)))]
    return ProfileF(depth=depth, top=top, support=[(x, _angle_value(rng)) for x in points])


def extend_profile(rng: np.random.Generator, base: Profile, s: Fraction) -> Profile:
    """Keep base on [0, s] and continue it with fresh random data beyond s"""
    depth = random_depth(rng, low=s)
    count = int(rng.integers(0, 3))
    if isinstance(base, ProfileC):
        prefix = base.truncated(s) if s < base.depth else base
        points = list(prefix.breakpoints)
        for x in _grid_points(rng, s, depth, count):
            points.append((x, Fraction(int(rng.integers(-2, 3)))))
        if points[-1][0] != depth:
            points.append((depth, points[-1][1]))
        return ProfileC(depth=depth, breakpoints=points)
    prefix = [(x, c) for x, c in base.support if x <= s]
    fresh = _grid_points(rng, s, depth, count)
    if isinstance(base, ProfileD):
        return ProfileD(depth=depth, support=prefix + [(x, _exact_value(rng)) for x in fresh])
    top = base.top
    if s == 0 and rng.random() < 0.5:
        top = TOP_CHOICES[int(rng.integers(len(TOP_CHOICES)))]
    return ProfileF(depth=depth, top=top, support=prefix + [(x, _angle_value(rng)) for x in fresh])


def random_family(rng: np.random.Generator, kind: ProfileKind, size: int) -> list[Profile]:
    """
    Profiles that branch off one common ancestor at random depths

    Members share prefixes, so separations land strictly inside both profiles.
    """
    base = random_profile(rng, kind)
    members = []
    for _ in range(size):
        s = GRID * int(rng.integers(0, int(base.depth / GRID) + 1))
        members.append(extend_profile(rng, base, s))
    return members


def random_spectrum(rng: np.random.Generator, max_terms: int = 8) -> Spectrum:
    """Strictly descending spectrum with exact rational levels and coefficients"""
    count = int(rng.integers(0, max_terms + 1))
    levels: set[Fraction] = set()
    while len(levels) < count:
        q = LEVEL_DENOMINATORS[int(rng.integers(len(LEVEL_DENOMINATORS)))]
        levels.add(Fraction(int(rng.integers(-3 * q, 3 * q + 1)), q))
    entries = []
    for g in sorted(levels):
        numerator = int(rng.integers(1, 10))
        sign = 1 if rng.random() < 0.5 else -1
        coefficient = Fraction(sign * numerator, int(rng.integers(1, 4)))
        entries.append(SpectrumEntry(coefficient=coefficient, level=Level(g=g)))
    return Spectrum(entries=tuple(entries))


def random_levelled(rng: np.random.Generator, max_terms: int = 8) -> LevelledNumber:
    spectrum = random_spectrum(rng, max_terms)
    return LevelledNumber.from_terms((entry.level.g, entry.coefficient) for entry in spectrum.entries)


def random_polar_point(rng: np.random.Generator, max_rho: float = 10.0) -> PolarPoint:
    return PolarPoint(rho=float(rng.uniform(0.0, max_rho)), phi=float(rng.uniform(0.0, 2 * math.pi)))


def _leading_gap_ok(gap: float) -> bool:
    return abs(gap) >= MIN_COEFFICIENT and not (DEGENERATE_GAP[0] <= abs(gap) <= DEGENERATE_GAP[1])


def admissible_pair(rng: np.random.Generator, max_attempts: int = 1000) -> tuple[ProfileF, ProfileF]:
    """
    Two F-profiles whose realizations converge cleanly

    Supports hold at most 5 grid points, values have magnitude in
    [0.1, pi - 0.1] and depths are at most 3. The first differing level lies at
    least 0.1 below the shorter depth, and its leading gap stays away from 0
    and from the degenerate band around 2.
    """
    for _ in range(max_attempts):
        pair = _candidate_pair(rng)
        if pair is not None:
            return pair
    raise RuntimeError(f"No admissible pair found in {max_attempts} attempts")


def _candidate_pair(rng: np.random.Generator) -> Optional[tuple[ProfileF, ProfileF]]:
    d1, d2 = random_depth(rng, low=GRID * 2), random_depth(rng, low=GRID * 2)
    shorter = min(d1, d2)
    # first differing level, interior to both
    g = GRID * int(rng.integers(0, int(shorter / GRID)))
    shared = _grid_points(rng, Fraction(0), g - GRID, int(rng.integers(0, 3))) if g > 0 else []
    prefix = [(x, _angle_value(rng)) for x in shared]

    if g == 0:
        top1 = float(rng.uniform(0.0, 2 * math.pi))
        top2 = float(rng.uniform(0.0, 2 * math.pi))
        gap = math.remainder(top1 - top2, 2 * math.pi)
        if abs(gap) < MIN_TOP_GAP or abs(math.sin(gap / 2)) > MAX_TOP_SINE:
            return None
        heads1, heads2 = [], []
    else:
        top1 = top2 = SHARED_TOP
        v1 = _angle_value(rng)
        v2 = _angle_value(rng) if rng.random() < 0.7 else None
        if not _leading_gap_ok(v1 - (v2 or 0.0)):
            return None
        heads1 = [(g, v1)]
        heads2 = [(g, v2)] if v2 is not None else []

    budget = MAX_SUPPORT - len(prefix)
    tail1 = [(x, _angle_value(rng)) for x in _grid_points(rng, g, d1, int(rng.integers(0, budget)))]
    tail2 = [(x, _angle_value(rng)) for x in _grid_points(rng, g, d2, int(rng.integers(0, budget)))]
    p1 = ProfileF(depth=d1, top=top1, support=prefix + heads1 + tail1)
    p2 = ProfileF(depth=d2, top=top2, support=prefix + heads2 + tail2)
    return p1, p2
