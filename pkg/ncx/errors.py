"""
Domain errors raised by the ncx services.

Every error subclasses ValueError so callers that only care about "bad input"
can keep catching ValueError, while the CLI and the HTTP layer map NcxError
subclasses to exit codes and status codes.
"""
from typing import Optional


class NcxError(ValueError):
    """Base class for all ncx domain errors"""


class DimensionMismatch(NcxError):
    """Matrix sizes do not agree with the declared dimensions"""


class NPowerNonzero(NcxError):
    """A composite of N consecutive differentials is nonzero"""

    def __init__(self, degree: int, message: Optional[str] = None):
        self.degree = degree
        super().__init__(message or f"d^N is nonzero starting at degree {degree}")


class InvalidAmplitude(NcxError):
    """Amplitude outside the range allowed by the operation"""


class FieldMismatch(NcxError):
    """Operands live over different fields"""


class ModulusMismatch(NcxError):
    """Operands have different N"""


class CommutationFailure(NcxError):
    """A chain map does not commute with the differentials"""

    def __init__(self, degree: int, message: Optional[str] = None):
        self.degree = degree
        super().__init__(message or f"chain map does not commute at degree {degree}")


class CompositionMismatch(NcxError):
    """Composed chain maps do not share the middle complex"""


class NotExact(NcxError):
    """A sequence that should be degreewise exact is not"""

    def __init__(self, degree: int, message: Optional[str] = None):
        self.degree = degree
        super().__init__(message or f"sequence is not exact at degree {degree}")


class LiftFailure(NcxError):
    """A lift through a surjection or an injection could not be found"""


class NotCommutative(NcxError):
    """A square or ladder does not commute"""


class PreconditionFailed(NcxError):
    """A homology vanishing hypothesis does not hold"""

    def __init__(self, degree: int, amplitude: int, message: Optional[str] = None):
        self.degree = degree
        self.amplitude = amplitude
        super().__init__(
            message or f"H^{degree}_({amplitude}) is nonzero, truncation hypothesis fails"
        )


class InvalidParameters(NcxError):
    """Operation parameters are out of range"""


class InconsistencyError(NcxError):
    """Two independent computations of the same quantity disagree"""


class ParseError(NcxError):
    """A document could not be parsed into a model"""

    def __init__(self, path: str, location: str, message: str):
        self.path = path
        self.location = location
        super().__init__(f"{path}: {location}: {message}")
