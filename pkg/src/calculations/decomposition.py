"""
Leading-term decomposition of levelled numbers and its inverse
"""
import logging
from typing import Iterable, Union

from pydantic import BaseModel, ConfigDict

from ..models.levelled import (
    CircleLevelled,
    Coefficient,
    Level,
    LevelledNumber,
    Spectrum,
    SpectrumEntry,
)
from ..utils.errors import SpectrumOrderError

logger = logging.getLogger(__name__)

SpectrumLike = Union[Spectrum, Iterable[tuple]]


class DecompositionStep(BaseModel):
    """One pass of x_{i+1} = x_i - c_i u^{g_i}"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    residual: LevelledNumber
    level: Level
    coefficient: Coefficient
    partial_sum: LevelledNumber


class SpectrumDecomposer:
    """Greedy spectrum extraction and exact synthesis for finite spectra"""

    @staticmethod
    def decomposition_trace(x: LevelledNumber) -> list[DecompositionStep]:
        """
        Run the greedy extraction and keep every intermediate state

        Args:
            x: Number to decompose

        Returns:
            Steps in extraction order; the last partial sum equals x
        """
        steps: list[DecompositionStep] = []
        residual = x
        partial = LevelledNumber.zero()
        while not residual.is_zero():
            level, coefficient = residual.leading_term()
            partial = partial.add(LevelledNumber.monomial(coefficient, level.g))
            steps.append(
                DecompositionStep(
                    residual=residual,
                    level=level,
                    coefficient=coefficient,
                    partial_sum=partial,
                )
            )
            logger.debug(f"Extracted {coefficient} at level g={level.g}")
            residual = residual.subtract(LevelledNumber.monomial(coefficient, level.g))
        return steps

    @staticmethod
    def decompose(x: LevelledNumber) -> Spectrum:
        """
        Spectrum of x: (coefficient, level) pairs in decreasing magnitude

        Args:
            x: Number to decompose

        Returns:
            Spectrum; empty for zero
        """
        entries = [
            SpectrumEntry.model_construct(coefficient=step.coefficient, level=step.level)
            for step in SpectrumDecomposer.decomposition_trace(x)
        ]
        return Spectrum._from_canonical(entries)

    @staticmethod
    def _as_spectrum(s: SpectrumLike) -> Spectrum:
        if isinstance(s, Spectrum):
            return s
        entries = []
        for coefficient, level in s:
            if not isinstance(level, Level):
                level = Level(g=level)
            entries.append(SpectrumEntry(coefficient=coefficient, level=level))
        levels = [entry.level.g for entry in entries]
        if any(a >= b for a, b in zip(levels, levels[1:])):
            raise SpectrumOrderError(
                f"Levels {[str(g) for g in levels]} are not strictly decreasing in magnitude"
            )
        return Spectrum._from_canonical(entries)

    @staticmethod
    def synthesize(s: SpectrumLike) -> LevelledNumber:
        """
        Build the unique number whose spectrum is s

        Args:
            s: Spectrum, or an iterable of (coefficient, level) pairs

        Returns:
            The sum of coefficient * u^g over the entries

        Raises:
            SpectrumOrderError: levels not strictly increasing in g
        """
        spectrum = SpectrumDecomposer._as_spectrum(s)
        return LevelledNumber._from_canonical(
            (entry.level.g, entry.coefficient) for entry in spectrum.entries
        )

    @staticmethod
    def circle_decompose(x: CircleLevelled) -> tuple[float, Spectrum]:
        """Standard angle (2*pi read as 0) and the spectrum of the infinitesimal tail"""
        return x.top, SpectrumDecomposer.decompose(x.tail)

    @staticmethod
    def circle_synthesize(top: float, tail_spectrum: SpectrumLike) -> CircleLevelled:
        """Inverse of circle_decompose"""
        tail = SpectrumDecomposer.synthesize(tail_spectrum)
        return CircleLevelled(top=top, tail=tail)
