"""
Convergence of rescaled hyperbolic distance to max(|R1 - R2|, R1 + R2 - 2*Phi)
"""
import logging
from itertools import product
from typing import Sequence

import numpy as np
import pandas as pd

from ..calculations.hyperbolic import HyperbolicCalculator
from ..models.points import AsymptoticParams

logger = logging.getLogger(__name__)

GRID_VALUES = (0.5, 1.0, 1.5, 2.0, 2.5, 3.0)
GRID_COLUMNS = ["row", "r1", "r2", "cap_phi", "n", "limit", "scaled", "error", "n_error"]


class ConvergenceGrid:
    """
    Evaluates convergence_error on a (R1, R2, Phi) grid for each scale

    One "cell" row per grid point and scale, then one "max" row per scale
    holding the worst error and worst n * error.
    """

    def __init__(self, values: Sequence[float] = GRID_VALUES):
        self.values = tuple(values)
        self.calculator = HyperbolicCalculator()

    def _cell(self, r1: float, r2: float, cap_phi: float, n: float) -> dict:
        params = AsymptoticParams(r1=r1, r2=r2, cap_phi=cap_phi, n=n)
        x1, x2 = params.realize()
        scaled = self.calculator.polar_distance(x1, x2) / n
        limit = self.calculator.tree_limit_estimate(r1, r2, cap_phi)
        error = abs(scaled - limit)
        return {
            "row": "cell",
            "r1": r1,
            "r2": r2,
            "cap_phi": cap_phi,
            "n": n,
            "limit": limit,
            "scaled": scaled,
            "error": error,
            "n_error": n * error,
        }

    def run(self, scales: Sequence[float]) -> pd.DataFrame:
        """
        Args:
            scales: Increasing scales N

        Returns:
            DataFrame with GRID_COLUMNS; cell rows first, summary rows last
        """
        cells = [
            self._cell(r1, r2, cap_phi, float(n))
            for n in scales
            for r1, r2, cap_phi in product(self.values, repeat=3)
        ]
        frame = pd.DataFrame.from_records(cells, columns=GRID_COLUMNS)

        summary = (
            frame.groupby("n", sort=True)[["error", "n_error"]]
            .max()
            .reset_index()
            .assign(row="max", r1=np.nan, r2=np.nan, cap_phi=np.nan, limit=np.nan, scaled=np.nan)
        )
        result = pd.concat([frame, summary[GRID_COLUMNS]], ignore_index=True)
        logger.info(
            f"Convergence grid: {len(frame)} cells over scales {list(scales)}, "
            f"max n*error {frame['n_error'].max():.4f}"
        )
        return result

    @staticmethod
    def max_error_by_scale(table: pd.DataFrame) -> dict[float, float]:
        summary = table[table["row"] == "max"]
        return dict(zip(summary["n"].tolist(), summary["error"].tolist()))
