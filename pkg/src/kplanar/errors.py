"""Exception hierarchy for the package.

Every domain error subclasses :class:`KplanarError`, so callers (and the
CLI) can catch one base type. Precondition abuse that no caller should ever
hit (negative counts, malformed tuples) raises plain ``ValueError``.
"""


class KplanarError(Exception):
    """Base class for all package-specific errors."""


class SelfLoopError(KplanarError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(KplanarError):
    """The same unordered vertex pair appears twice in an edge list."""


class EndpointOutOfRangeError(KplanarError):
    """An edge endpoint is not in [0, n)."""


class TooManyEdgesError(KplanarError):
    """Requested edge count exceeds C(n, 2)."""


class InvalidDrawingError(KplanarError):
    """A drawing violates its structural invariants."""


class DegenerateSegmentError(KplanarError):
    """A segment has zero length."""


class ValidationRetryLimitExceededError(KplanarError):
    """Random placement kept producing degenerate drawings."""


class GeneralPositionViolationError(KplanarError):
    """A counting operation received a drawing that fails validation."""

    def __init__(self, report, message="drawing is not in general position"):
        super().__init__(f"{message}: {report.summary()}")
        self.report = report


class ValidationFailureError(KplanarError):
    """A decomposition operation received a drawing that fails validation."""

    def __init__(self, report, message="drawing is not in general position"):
        super().__init__(f"{message}: {report.summary()}")
        self.report = report


class InvalidKError(KplanarError):
    """Class count k is outside the supported range."""


class LabelingSizeMismatchError(KplanarError):
    """A vertex labeling does not cover the graph's vertices."""


class ReportGraphMismatchError(KplanarError):
    """A crossing report references edges the graph does not have."""


class ColoringSizeMismatchError(KplanarError):
    """An edge coloring does not cover the report's edges."""


class EnumerationTooLargeError(KplanarError):
    """k**n exceeds the enumeration guard."""


class InvalidGridError(KplanarError):
    """An experiment grid specification is empty or malformed."""


class PlanarInstanceError(KplanarError):
    """The produced drawing has no crossings, so the ratio is undefined."""
