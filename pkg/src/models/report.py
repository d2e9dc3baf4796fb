"""
Experiment configuration and report rows
"""
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .levelled import to_exact

DEFAULT_SEED = 42
DEFAULT_TRIALS = 1000
DEFAULT_SCALES = (25.0, 50.0, 100.0, 200.0, 400.0)
DEFAULT_THRESHOLD = 0.1


class Command(str, Enum):
    VERIFY_METRIC = "verify-metric"
    CONVERGENCE_GRID = "convergence-grid"
    EMBED_PAIR = "embed-pair"
    SUBCONE_DEMO = "subcone-demo"
    DECOMPOSE = "decompose"


class ReportFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class ExperimentConfig(BaseModel):
    """Validated settings for one CLI run"""

    command: Command
    seed: int = Field(DEFAULT_SEED, ge=0)
    scales: tuple[Annotated[float, Field(allow_inf_nan=False)], ...] = DEFAULT_SCALES
    trials: int = Field(DEFAULT_TRIALS, ge=1)
    out: Optional[Path] = None
    format: ReportFormat = ReportFormat.CSV
    threshold: float = Field(DEFAULT_THRESHOLD, gt=0, allow_inf_nan=False)

    @field_validator("scales")
    @classmethod
    def _increasing_scales(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        if not value:
            raise ValueError("At least one scale is required")
        if any(n < 1 for n in value):
            raise ValueError(f"Scales {value} must all be >= 1")
        if any(a >= b for a, b in zip(value, value[1:])):
            raise ValueError(f"Scales {value} must be strictly increasing")
        return value


class ConvergenceRow(BaseModel):
    """Rescaled hyperbolic distance of a realized pair against its tree distance"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    pair: str = Field(..., description="Profile index pair, e.g. '0-1'")
    n: float = Field(..., ge=1)
    tree_delta: Fraction
    hyper_scaled: float = Field(..., ge=0)
    error: float = Field(..., ge=0)

    @field_validator("tree_delta", mode="before")
    @classmethod
    def _exact(cls, value):
        return to_exact(value)

    def to_dict(self) -> dict:
        return {
            "pair": self.pair,
            "n": self.n,
            "tree_delta": float(self.tree_delta),
            "hyper_scaled": self.hyper_scaled,
            "error": self.error,
        }


class PropertyCount(BaseModel):
    """How many instances of one property were checked and how many failed"""

    property: str
    space: str = Field("-", description="Profile space C/D/F, or '-' for non-tree suites")
    checked: int = Field(0, ge=0)
    violations: int = Field(0, ge=0)

    def to_dict(self) -> dict:
        return self.model_dump()


class MetricReport(BaseModel):
    """Outcome of the verification suites for one seed"""

    seed: int
    trials: int
    counts: list[PropertyCount] = Field(default_factory=list)

    @property
    def total_violations(self) -> int:
        return sum(count.violations for count in self.counts)

    @property
    def passed(self) -> bool:
        return self.total_violations == 0
