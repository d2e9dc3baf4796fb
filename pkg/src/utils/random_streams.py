"""
Seeded, splittable random streams for the property suites

Every suite draws from its own PCG64 generator. The generators are children of
one numpy SeedSequence, spawned in the fixed order of SUITE_STREAMS, so adding
trials to one suite never shifts the draws of another.
"""
from typing import Dict

import numpy as np

SUITE_STREAMS = (
    "metric_axioms_c",
    "metric_axioms_d",
    "metric_axioms_f",
    "four_point_c",
    "four_point_d",
    "four_point_f",
    "geodesic_isometry",
    "branch_point",
    "cross_formula",
    "decomposition",
    "admissible_pairs",
)


def suite_generators(seed: int) -> Dict[str, np.random.Generator]:
    """
    Build one independent generator per named suite

    Args:
        seed: Non-negative master seed

    Returns:
        Mapping suite name -> numpy Generator
    """
    children = np.random.SeedSequence(seed).spawn(len(SUITE_STREAMS))
    return {
        name: np.random.Generator(np.random.PCG64(child))
        for name, child in zip(SUITE_STREAMS, children)
    }


def suite_generator(seed: int, name: str) -> np.random.Generator:
    """Generator for a single named suite"""
    if name not in SUITE_STREAMS:
        raise KeyError(f"Unknown random stream '{name}'")
    return suite_generators(seed)[name]
