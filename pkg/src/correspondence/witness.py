"""
Asymptotic-subcone witnesses: finite configurations tracked across scales
"""
import logging
from itertools import combinations
from typing import Sequence

from pydantic import BaseModel, ConfigDict

from ..models.profiles import ProfileF
from ..models.report import ConvergenceRow
from ..utils.errors import ExperimentConfigError
from .embedding import ProfileEmbedding

logger = logging.getLogger(__name__)

# Four F-profiles: a shared top with two branches, a short branch and a second top
DEMO_CONFIGURATION: tuple[ProfileF, ...] = (
    ProfileF(depth="2", top=1.0, support=[("1/2", 1.0)]),
    ProfileF(depth="5/2", top=1.0, support=[("1/2", 1.0), ("1", -0.5)]),
    ProfileF(depth="3/2", top=1.0, support=[("1/2", -0.7)]),
    ProfileF(depth="2", top=2.5, support=[("1", 0.4)]),
)


class SubconeWitness(BaseModel):
    """Rows for every pair and scale, plus the worst error per scale"""

    model_config = ConfigDict(frozen=True)

    rows: tuple[ConvergenceRow, ...]
    max_error_by_scale: tuple[tuple[float, float], ...]
    monotone: bool

    def max_error_at(self, n: float) -> float:
        for scale, error in self.max_error_by_scale:
            if scale == n:
                return error
        raise KeyError(f"Scale {n} not in witness")


class SubconeExperiment:
    """
    Evaluates lim 1/N d(x_j, x_k) against the tree distance for a configuration

    Rows are ordered by (pair index, scale).
    """

    def __init__(self, config: Sequence[ProfileF], scales: Sequence[float]):
        if len(config) < 2:
            raise ExperimentConfigError(f"A witness needs at least 2 profiles, got {len(config)}")
        scales = tuple(float(n) for n in scales)
        if not scales or any(a >= b for a, b in zip(scales, scales[1:])):
            raise ExperimentConfigError(f"Scales {scales} must be nonempty and increasing")
        self.config = tuple(config)
        self.scales = scales
        self.embedding = ProfileEmbedding()

    def run(self) -> SubconeWitness:
        rows = []
        for j, k in combinations(range(len(self.config)), 2):
            for n in self.scales:
                rows.append(
                    self.embedding.pair_error(self.config[j], self.config[k], n, pair=f"{j}-{k}")
                )

        max_errors = tuple(
            (n, max(row.error for row in rows if row.n == n)) for n in self.scales
        )
        worst = [error for _, error in max_errors]
        monotone = all(later <= earlier for earlier, later in zip(worst, worst[1:]))
        if not monotone:
            logger.warning(f"Max pairwise error is not non-increasing across scales: {worst}")
        logger.info(f"Subcone witness: {len(rows)} rows, final max error {worst[-1]:.6g}")
        return SubconeWitness(rows=tuple(rows), max_error_by_scale=max_errors, monotone=monotone)


def subcone_witness(config: Sequence[ProfileF], scales: Sequence[float]) -> SubconeWitness:
    """Table of ConvergenceRows for every unordered pair and every scale"""
    return SubconeExperiment(config, scales).run()
