from fractions import Fraction

import pytest

from src.calculations.tree_metric import TreeMetric
from src.models.profiles import ProfileC, ProfileD, ProfileF, ProfileKind
from src.utils.errors import DepthRangeError, ProfileKindError
from src.verification.generators import GRID, random_family

tm = TreeMetric
d = TreeMetric.distance


# --- separation and distance examples ---

def test_identical_profiles_separate_at_depth():
    alpha = ProfileD(depth="7/3", support={1: 1, 2: -1})
    assert tm.separation(alpha, alpha).c == Fraction(7, 3)
    assert d(alpha, alpha) == 0


def test_different_tops_separate_at_root():
    alpha = ProfileF(depth=2, top=1.0, support={1: 0.5})
    beta = ProfileF(depth=2, top=2.0, support={1: 0.5})
    assert tm.separation(alpha, beta).c == 0
    assert d(alpha, beta) == 4


def test_separation_capped_at_shorter_depth():
    alpha = ProfileD(depth=2, support={1: 1})
    beta = ProfileD(depth=3, support={1: 1, "5/2": 4})
    assert tm.separation(alpha, beta).c == 2
    assert d(alpha, beta) == 1


def test_distance_hand_example(d_pair):
    alpha, beta = d_pair
    assert tm.separation(alpha, beta).c == 1
    assert d(alpha, beta) == 2


def test_point_in_one_support_only_is_a_difference():
    alpha = ProfileD(depth=3, support={1: 1})
    beta = ProfileD(depth=3, support={1: 1, 2: 5})
    assert tm.separation(alpha, beta).c == 2


def test_tip_value_is_invisible():
    alpha = ProfileD(depth=2, support={2: 5})
    beta = ProfileD(depth=2)
    assert d(alpha, beta) == 0
    assert alpha.canonical() == beta.canonical()
    assert alpha != beta
    assert d(ProfileF(depth=0, top=1.0), ProfileF(depth=0, top=2.0)) == 0


def test_pl_separation():
    alpha = ProfileC(depth=2, breakpoints=[(0, 0), (1, 1), (2, 1)])
    beta = ProfileC(depth=2, breakpoints=[(0, 0), (1, 1), (2, 2)])
    gamma = ProfileC(depth=3, breakpoints=[(0, 0), (3, 2)])
    assert tm.separation(alpha, beta).c == 1
    assert tm.separation(alpha, gamma).c == 0
    assert d(alpha, beta) == 2


def test_pl_collinear_breakpoints_are_the_same_point():
    alpha = ProfileC(depth=2, breakpoints=[(0, 0), (2, 4)])
    beta = ProfileC(depth=2, breakpoints=[(0, 0), ("1/2", 1), (1, 2), (2, 4)])
    assert d(alpha, beta) == 0
    assert beta.canonical() == alpha


def test_pl_separation_inside_interval():
    alpha = ProfileC(depth=4, breakpoints=[(0, 0), (1, 1), (4, 1)])
    beta = ProfileC(depth=4, breakpoints=[(0, 0), (1, 1), (3, 1), (4, 3)])
    assert tm.separation(alpha, beta).c == 3


def test_mixed_kinds_rejected():
    with pytest.raises(ProfileKindError):
        tm.distance(ProfileD(depth=1), ProfileF(depth=1))
    with pytest.raises(TypeError):
        tm.separation(ProfileC(depth=0), ProfileD(depth=0))


def test_profile_validation():
    with pytest.raises(ValueError):
        ProfileD(depth=1, support={2: 1})
    with pytest.raises(ValueError):
        ProfileD(depth=1, support={0: 1})
    with pytest.raises(ValueError):
        ProfileD(depth=1, support={"1/2": 0})
    with pytest.raises(ValueError):
        ProfileD(depth=-1)
    with pytest.raises(ValueError):
        ProfileC(depth=2, breakpoints=[(0, 1), (2, 0)])
    with pytest.raises(ValueError):
        ProfileC(depth=2, breakpoints=[(0, 0), (1, 0)])


@pytest.mark.parametrize("bad", [float("nan"), float("inf")])
def test_f_profile_rejects_non_finite_angles(bad):
    with pytest.raises(ValueError):
        ProfileF(depth=1, top=bad)
    with pytest.raises(ValueError):
        ProfileF(depth=1, top=0.5, support={"1/2": bad})


# --- restriction, branch points, geodesics ---

def test_restrict_examples():
    alpha = ProfileF(depth=3, top=2.0, support={1: 0.5, "5/2": -1.0})
    assert tm.restrict(alpha, 3) is alpha
    assert tm.restrict(alpha, 0) == ProfileF.basepoint(top=2.0)
    assert tm.restrict(alpha, 1) == ProfileF(depth=1, top=2.0, support={1: 0.5})
    with pytest.raises(DepthRangeError):
        tm.restrict(alpha, 4)
    with pytest.raises(DepthRangeError):
        tm.restrict(alpha, -1)


def test_restrict_pl_interpolates():
    alpha = ProfileC(depth=2, breakpoints=[(0, 0), (2, 4)])
    assert tm.restrict(alpha, "1/2") == ProfileC(depth="1/2", breakpoints=[(0, 0), ("1/2", 1)])
    assert tm.restrict(alpha, 0) == ProfileC.basepoint()


def test_restrict_distance(rng):
    for kind in ProfileKind:
        for alpha in random_family(rng, kind, 50):
            s = GRID * int(rng.integers(0, int(alpha.depth / GRID) + 1))
            assert d(tm.restrict(alpha, s), alpha) == alpha.depth - s
            s2 = GRID * int(rng.integers(0, int(alpha.depth / GRID) + 1))
            assert d(tm.restrict(alpha, s), tm.restrict(alpha, s2)) == abs(s - s2)


def test_branch_point_examples(d_pair):
    alpha, beta = d_pair
    assert tm.branch_point(alpha, beta) == ProfileD(depth=1, support={1: 1})
    short = ProfileD(depth=1, support={"1/2": 2})
    assert tm.branch_point(short, short) == short


def test_branch_point_additive(rng):
    for i in range(1000):
        kind = list(ProfileKind)[i % 3]
        alpha, beta = random_family(rng, kind, 2)
        bp = tm.branch_point(alpha, beta)
        assert d(alpha, beta) == d(alpha, bp) + d(bp, beta)


def test_geodesic_endpoints_and_branch(d_pair):
    alpha, beta = d_pair
    total = d(alpha, beta)
    h = tm.separation(alpha, beta).c
    assert tm.geodesic(alpha, beta, 0) == alpha
    assert tm.geodesic(alpha, beta, total) == beta
    assert tm.geodesic(alpha, beta, alpha.depth - h) == tm.branch_point(alpha, beta)
    with pytest.raises(DepthRangeError):
        tm.geodesic(alpha, beta, total + 1)


def test_geodesic_isometry(rng):
    for i in range(1000):
        kind = list(ProfileKind)[i % 3]
        alpha, beta = random_family(rng, kind, 2)
        total = d(alpha, beta)
        s = total * Fraction(int(rng.integers(0, 21)), 20)
        t = total * Fraction(int(rng.integers(0, 21)), 20)
        assert d(tm.geodesic(alpha, beta, s), tm.geodesic(alpha, beta, t)) == abs(s - t)
        assert tm.same_point(tm.geodesic(alpha, beta, total), beta)


def test_points_between_lie_on_the_geodesic(rng):
    for i in range(300):
        kind = list(ProfileKind)[i % 3]
        alpha, beta = random_family(rng, kind, 2)
        total = d(alpha, beta)
        for source in (alpha, beta):
            for k in range(int(source.depth / GRID) + 1):
                p = tm.restrict(source, GRID * k)
                if d(alpha, p) + d(p, beta) == total:
                    assert tm.same_point(p, tm.geodesic(alpha, beta, d(alpha, p)))


# --- metric and tree properties ---

@pytest.mark.parametrize("kind", list(ProfileKind))
def test_metric_axioms(rng, kind):
    for _ in range(1000):
        a, b, c = random_family(rng, kind, 3)
        assert d(a, b) >= 0
        assert d(a, b) == d(b, a)
        assert tm.separation(a, b).c == tm.separation(b, a).c
        assert (d(a, b) == 0) == (a.canonical() == b.canonical())
        assert d(a, c) <= d(a, b) + d(b, c)


@pytest.mark.parametrize("kind", list(ProfileKind))
def test_four_point_condition(rng, kind):
    for _ in range(1000):
        w, x, y, z = random_family(rng, kind, 4)
        assert tm.four_point_check(w, x, y, z)
        assert tm.four_point_check(w, y, x, z)
        assert tm.four_point_check(w, z, x, y)


def test_four_point_with_repeats(d_pair):
    alpha, beta = d_pair
    gamma = ProfileD(depth=3, support={2: 1})
    assert tm.four_point_check(alpha, alpha, beta, gamma)
    assert tm.four_point_check(alpha, beta, alpha, beta)


def test_gromov_product_is_separation(rng):
    for kind in ProfileKind:
        for _ in range(100):
            alpha, beta, base = random_family(rng, kind, 3)
            assert tm.gromov_product(alpha, beta) == tm.separation(alpha, beta).c
            assert tm.gromov_product(alpha, beta, base) >= 0
