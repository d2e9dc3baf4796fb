"""
Error types raised by the asymptree library
"""


class AsymptreeError(Exception):
    """Base class for all library errors"""


class HyperbolicDomainError(AsymptreeError, ValueError):
    """A point lies on or outside the unit circle, or a coordinate is not finite"""


class ZeroLevelError(AsymptreeError, ValueError):
    """Zero has no sim-class"""


class NotFiniteError(AsymptreeError, ValueError):
    """Standard part requested for an infinite levelled number"""

    def __init__(self, message: str = "not finite"):
        super().__init__(message)


class SpectrumOrderError(AsymptreeError, ValueError):
    """Spectrum levels are not strictly decreasing in magnitude"""


class ProfileKindError(AsymptreeError, TypeError):
    """Two profiles from different spaces were combined"""


class DepthRangeError(AsymptreeError, ValueError):
    """A depth or path parameter falls outside its admissible interval"""


class AdmissibilityError(AsymptreeError, ValueError):
    """A profile cannot be realized without angular aliasing"""


class ExpressionParseError(AsymptreeError, ValueError):
    """A levelled-number expression could not be parsed"""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class ProfileFormatError(AsymptreeError, ValueError):
    """A profile JSON document is malformed"""


class ExperimentConfigError(AsymptreeError, ValueError):
    """Experiment settings are inconsistent (scales, trials, profile counts)"""
