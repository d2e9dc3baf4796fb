"""
Property suites behind `verify-metric`

Each suite draws from its own named random stream and counts, per property,
how many instances were checked and how many failed.
"""
import logging
from fractions import Fraction
from typing import Callable, Iterable

from ..calculations.decomposition import SpectrumDecomposer
from ..calculations.hyperbolic import HyperbolicCalculator
from ..calculations.tree_metric import TreeMetric
from ..models.profiles import ProfileKind
from ..models.report import MetricReport, PropertyCount
from ..utils.random_streams import suite_generators
from .generators import (
    random_family,
    random_levelled,
    random_polar_point,
    random_spectrum,
)

logger = logging.getLogger(__name__)

CROSS_FORMULA_TOLERANCE = 1e-9
CROSS_FORMULA_FACTOR = 10
DECOMPOSITION_FACTOR = 10
FAMILY_SIZE = 6
GEODESIC_STEPS = 20


class _Tally:
    """Running check/violation counts keyed by (property, space)"""

    def __init__(self):
        self.counts: dict[tuple[str, str], list[int]] = {}

    def record(self, prop: str, space: str, ok: bool) -> None:
        entry = self.counts.setdefault((prop, space), [0, 0])
        entry[0] += 1
        if not ok:
            entry[1] += 1
            logger.debug(f"Violation of {prop} in space {space}")

    def results(self) -> list[PropertyCount]:
        return [
            PropertyCount(property=prop, space=space, checked=checked, violations=violations)
            for (prop, space), (checked, violations) in self.counts.items()
        ]


class MetricPropertySuite:
    """
    Exact tree-metric checks in C, D and F plus the hyperbolic and decomposition oracles

    Args:
        seed: Master seed for the suite streams
        trials: Instances per tree property; the float cross-formula and the
            decomposition roundtrip use CROSS_FORMULA_FACTOR / DECOMPOSITION_FACTOR
            times as many
    """

    def __init__(self, seed: int, trials: int):
        self.seed = seed
        self.trials = trials
        self.streams = suite_generators(seed)
        self.tally = _Tally()

    def _family_draws(self, stream: str, kind: ProfileKind, arity: int) -> Iterable[tuple]:
        rng = self.streams[stream]
        family = []
        for _ in range(self.trials):
            if len(family) < arity:
                family = random_family(rng, kind, FAMILY_SIZE)
            picks = rng.choice(len(family), size=arity, replace=True)
            yield tuple(family[int(i)] for i in picks)
            # refresh the family now and then so instances vary
            if rng.random() < 0.2:
                family = []

    def check_metric_axioms(self, kind: ProfileKind) -> None:
        d = TreeMetric.distance
        space = kind.value
        for a, b, c in self._family_draws(f"metric_axioms_{space.lower()}", kind, 3):
            self.tally.record("nonnegativity", space, d(a, b) >= 0)
            self.tally.record("symmetry", space, d(a, b) == d(b, a))
            self.tally.record("identity", space, (d(a, b) == 0) == (a.canonical() == b.canonical()))
            self.tally.record("self_distance", space, d(a, a) == 0)
            self.tally.record("triangle", space, d(a, c) <= d(a, b) + d(b, c))
            self.tally.record(
                "separation_symmetry",
                space,
                TreeMetric.separation(a, b).c == TreeMetric.separation(b, a).c,
            )

    def check_four_point(self, kind: ProfileKind) -> None:
        space = kind.value
        for w, x, y, z in self._family_draws(f"four_point_{space.lower()}", kind, 4):
            ok = (
                TreeMetric.four_point_check(w, x, y, z)
                and TreeMetric.four_point_check(w, y, x, z)
                and TreeMetric.four_point_check(w, z, x, y)
            )
            self.tally.record("four_point", space, ok)

    def check_geodesics(self) -> None:
        rng = self.streams["geodesic_isometry"]
        kinds = list(ProfileKind)
        for i in range(self.trials):
            kind = kinds[i % len(kinds)]
            alpha, beta = random_family(rng, kind, 2)
            total = TreeMetric.distance(alpha, beta)
            s = total * Fraction(int(rng.integers(0, GEODESIC_STEPS + 1)), GEODESIC_STEPS)
            t = total * Fraction(int(rng.integers(0, GEODESIC_STEPS + 1)), GEODESIC_STEPS)
            path_s = TreeMetric.geodesic(alpha, beta, s)
            path_t = TreeMetric.geodesic(alpha, beta, t)
            self.tally.record(
                "geodesic_isometry", kind.value, TreeMetric.distance(path_s, path_t) == abs(s - t)
            )
            endpoints = TreeMetric.same_point(TreeMetric.geodesic(alpha, beta, 0), alpha) and (
                TreeMetric.same_point(TreeMetric.geodesic(alpha, beta, total), beta)
            )
            self.tally.record("geodesic_endpoints", kind.value, endpoints)

    def check_branch_points(self) -> None:
        rng = self.streams["branch_point"]
        kinds = list(ProfileKind)
        for i in range(self.trials):
            kind = kinds[i % len(kinds)]
            alpha, beta = random_family(rng, kind, 2)
            bp = TreeMetric.branch_point(alpha, beta)
            d = TreeMetric.distance
            self.tally.record("branch_additivity", kind.value, d(alpha, beta) == d(alpha, bp) + d(bp, beta))

    def check_cross_formula(self) -> None:
        rng = self.streams["cross_formula"]
        for _ in range(CROSS_FORMULA_FACTOR * self.trials):
            p, q = random_polar_point(rng), random_polar_point(rng)
            polar = HyperbolicCalculator.polar_distance(p, q)
            disk = HyperbolicCalculator.disk_distance(
                HyperbolicCalculator.polar_to_disk(p), HyperbolicCalculator.polar_to_disk(q)
            )
            self.tally.record(
                "cross_formula", "-", abs(polar - disk) <= CROSS_FORMULA_TOLERANCE * (1 + polar)
            )

    def check_decomposition(self) -> None:
        rng = self.streams["decomposition"]
        decomposer = SpectrumDecomposer()
        for _ in range(DECOMPOSITION_FACTOR * self.trials):
            x = random_levelled(rng)
            spectrum = decomposer.decompose(x)
            self.tally.record("synthesize_decompose", "-", decomposer.synthesize(spectrum) == x)
            s = random_spectrum(rng)
            self.tally.record("decompose_synthesize", "-", decomposer.decompose(decomposer.synthesize(s)) == s)

    def run(self) -> MetricReport:
        """Run every suite and collect the counts"""
        checks: list[Callable[[], None]] = []
        for kind in (ProfileKind.C, ProfileKind.D, ProfileKind.F):
            checks.append(lambda kind=kind: self.check_metric_axioms(kind))
        for kind in (ProfileKind.C, ProfileKind.D, ProfileKind.F):
            checks.append(lambda kind=kind: self.check_four_point(kind))
        checks += [
            self.check_geodesics,
            self.check_branch_points,
            self.check_cross_formula,
            self.check_decomposition,
        ]
        for check in checks:
            check()

        report = MetricReport(seed=self.seed, trials=self.trials, counts=self.tally.results())
        logger.info(
            f"verify-metric seed={self.seed} trials={self.trials}: "
            f"{report.total_violations} violations"
        )
        return report
