import numpy as np
import pytest

from src.correspondence.witness import DEMO_CONFIGURATION
from src.models.profiles import ProfileD, ProfileF
from src.utils.random_streams import suite_generator


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def stream():
    """Named suite stream under the default seed"""
    return lambda name: suite_generator(42, name)


@pytest.fixture
def demo_profiles():
    return DEMO_CONFIGURATION


@pytest.fixture
def d_pair():
    alpha = ProfileD(depth=2, support={1: 1})
    beta = ProfileD(depth=2, support={1: 2})
    return alpha, beta


@pytest.fixture
def f_shared_top():
    short = ProfileF(depth="2", top=1.0, support=[("1/2", 1.0)])
    long = ProfileF(depth="5/2", top=1.0, support=[("1/2", 1.0), ("1", -0.5)])
    return short, long
