import logging
import math
from collections import Counter
from fractions import Fraction

import pytest

from src.calculations.decomposition import SpectrumDecomposer
from src.calculations.tree_metric import TreeMetric
from src.correspondence.embedding import LimitCase, ProfileEmbedding
from src.correspondence.witness import SubconeExperiment, subcone_witness
from src.models.points import PolarPoint
from src.models.profiles import ProfileF, ProfileKind
from src.utils.errors import AdmissibilityError, ExperimentConfigError
from src.verification.generators import admissible_pair, random_family, random_profile

embed = ProfileEmbedding
SCALES = (25, 50, 100, 200, 400)


def test_realize_basepoint_is_origin():
    realization = embed.realize_at_scale(ProfileF.basepoint(top=1.2), 10)
    assert realization.point == PolarPoint(rho=0)
    assert realization.symbolic_angle().top == pytest.approx(1.2)


def test_realize_formula():
    profile = ProfileF(depth=2, top=1.0, support={1: 0.5})
    realization = embed.realize_at_scale(profile, 100)
    assert realization.point.rho == 200
    assert realization.point.phi == 1.0
    assert realization.point.tail == ((0.5, 200.0),)
    assert realization.principal_angle == 1.0


def test_realize_keeps_scale(rng):
    for _ in range(200):
        profile = random_profile(rng, ProfileKind.F)
        n = float(rng.uniform(1, 500))
        assert embed.realize_at_scale(profile, n).point.rho / n == pytest.approx(float(profile.depth), rel=1e-15)


def test_symbolic_angle_roundtrip():
    profile = ProfileF(depth=3, top=0.4, support={"1/2": -1.25, 2: 3.0})
    top, spectrum = SpectrumDecomposer.circle_decompose(embed.realize_at_scale(profile, 50).symbolic_angle())
    assert top == profile.top
    assert spectrum.pairs() == [(-1.25, Fraction(1, 2)), (3.0, Fraction(2))]


def test_realize_rejects_inadmissible():
    with pytest.raises(AdmissibilityError):
        embed.realize_at_scale(ProfileF(depth=1, support={1: 3.5}), 10)
    with pytest.raises(AdmissibilityError):
        embed.realize_at_scale(ProfileF(depth=1, support={1: -math.pi}), 10)
    with pytest.raises(AdmissibilityError):
        embed.realize_at_scale(ProfileF(depth=1), 0.5)


def test_pair_error_identical_profiles(f_shared_top):
    short, _ = f_shared_top
    for n in SCALES:
        row = embed.pair_error(short, short, n)
        assert row.error == 0
        assert row.tree_delta == 0


def test_pair_error_radial_pair():
    p1 = ProfileF(depth=1, top=0.3, support={"1/2": 0.9})
    p2 = ProfileF(depth=3, top=0.3, support={"1/2": 0.9})
    for n in SCALES:
        row = embed.pair_error(p1, p2, n)
        assert row.tree_delta == 2
        assert row.error < 1e-9


def test_pair_error_generic_pair(f_shared_top):
    short, long = f_shared_top
    coarse = embed.pair_error(short, long, 50)
    fine = embed.pair_error(short, long, 400)
    assert fine.tree_delta == Fraction(5, 2)
    assert fine.error <= 0.1
    assert fine.error < coarse.error
    assert fine.error == pytest.approx(abs(fine.hyper_scaled - 2.5))


def test_admissible_pairs_converge(stream):
    rng = stream("admissible_pairs")
    for _ in range(100):
        p1, p2 = admissible_pair(rng)
        coarse = embed.pair_error(p1, p2, 50)
        fine = embed.pair_error(p1, p2, 400)
        assert fine.error <= 0.1
        assert fine.error < coarse.error


def test_admissible_pairs_error_is_order_one_over_n(stream):
    rng = stream("admissible_pairs")
    worst = 0.0
    for _ in range(100):
        p1, p2 = admissible_pair(rng)
        worst = max(worst, max(n * embed.pair_error(p1, p2, n).error for n in SCALES))
    assert worst <= 3.0


def test_analytic_limit_matches_tree_distance(rng):
    cases = Counter()
    for _ in range(1000):
        p1, p2 = random_family(rng, ProfileKind.F, 2)
        assert embed.analytic_limit(p1, p2) == TreeMetric.distance(p1, p2)
        cases[embed.limit_case(p1, p2)] += 1
    for _ in range(1000):
        p1, p2 = random_profile(rng, ProfileKind.F), random_profile(rng, ProfileKind.F)
        assert embed.analytic_limit(p1, p2) == TreeMetric.distance(p1, p2)
        cases[embed.limit_case(p1, p2)] += 1
    assert all(cases[case] > 0 for case in LimitCase)


def test_pair_error_logs_principal_angles(caplog):
    p1 = ProfileF(depth=2, top=1.0)
    p2 = ProfileF(depth=2, top=2.5)
    with caplog.at_level(logging.DEBUG, logger="src.correspondence.embedding"):
        embed.pair_error(p1, p2, 25)
    assert "angles 1.000000 / 2.500000" in caplog.text


def test_limit_cases():
    base = ProfileF(depth=3, top=1.0, support={1: 0.5})
    assert embed.limit_case(base, ProfileF(depth=2, top=1.0, support={1: -0.5})) is LimitCase.WITHIN_BOTH
    assert embed.limit_case(ProfileF(depth=1, top=1.0), base) is LimitCase.WITHIN_BOTH
    assert embed.limit_case(ProfileF(depth="1/2", top=1.0), base) is LimitCase.WITHIN_LONGER
    assert embed.limit_case(ProfileF(depth=2, top=1.0, support={1: 0.5}), base) is LimitCase.BEYOND_BOTH
    assert embed.limit_case(base, ProfileF(depth=1, top=2.0)) is LimitCase.WITHIN_BOTH


def test_subcone_identical_profiles():
    profile = ProfileF(depth=2, top=0.5, support={1: 1.0})
    witness = subcone_witness([profile, profile, profile], SCALES)
    assert len(witness.rows) == 3 * len(SCALES)
    assert all(row.error == 0 for row in witness.rows)


def test_subcone_two_profiles_match_pair_error(f_shared_top):
    short, long = f_shared_top
    witness = subcone_witness([short, long], SCALES)
    assert list(witness.rows) == [embed.pair_error(short, long, n) for n in SCALES]


def test_subcone_demo_configuration(demo_profiles):
    witness = subcone_witness(demo_profiles, SCALES)
    assert len(witness.rows) == 6 * len(SCALES)
    assert [row.pair for row in witness.rows[:6]] == ["0-1"] * 5 + ["0-2"]
    assert witness.max_error_at(400) <= 0.1
    assert witness.monotone
    assert witness == subcone_witness(demo_profiles, SCALES)


def test_subcone_requires_two_profiles(demo_profiles):
    with pytest.raises(ExperimentConfigError):
        subcone_witness(demo_profiles[:1], SCALES)
    with pytest.raises(ExperimentConfigError):
        SubconeExperiment(demo_profiles, (50, 25))
