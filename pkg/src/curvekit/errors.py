"""Exception types shared across the package."""


class CurvekitError(Exception):
    """Base class for all structured errors."""


class ComplexityTooLow(CurvekitError):
    pass


class ClosedUnsupported(CurvekitError):
    pass


class MatchingViolation(CurvekitError):
    pass


class NotConnected(CurvekitError):
    pass


class PeripheralCurve(CurvekitError):
    pass


class NullCurve(CurvekitError):
    pass


class TriangulationMismatch(CurvekitError):
    pass


class EmptyProjection(CurvekitError):
    pass


class NotOverlapping(CurvekitError):
    pass


class ChainNotLarge(CurvekitError):
    pass


class NotExact(CurvekitError):
    pass


class VertexMissesZ(CurvekitError):
    pass


class HypothesisFailed(CurvekitError):
    def __init__(self, line, detail=""):
        self.line = line
        self.detail = detail
        super().__init__(f"hypothesis failed: {line}" + (f" ({detail})" if detail else ""))


class ThresholdNotMet(CurvekitError):
    pass


class WitnessBlocked(CurvekitError):
    pass


class DomainNotDeclared(CurvekitError):
    pass


class NoOverlap(CurvekitError):
    pass


class StrengthTooLow(CurvekitError):
    pass


class SearchExhausted(CurvekitError):
    pass


class NotWarmup(CurvekitError):
    pass


class MissingParameter(CurvekitError):
    pass


class WeightCapExceeded(CurvekitError):
    """Raised when a strand-level operation would exceed the configured weight cap."""
