"""Exception types shared across the package."""


class MixedCagesError(Exception):
    """Base class for all package-specific errors."""


class NotAPrimePowerError(MixedCagesError):
    """The requested field order is not a prime power."""


class OutOfRangeError(MixedCagesError):
    """A parameter is outside the range the construction supports."""


class KindMismatchError(MixedCagesError):
    """A vertex label of the wrong kind was passed (line vs point)."""


class SimplicityViolationError(MixedCagesError):
    """An insertion would create a loop, a parallel link, or an
    edge parallel to an arc."""


class TooLargeError(MixedCagesError):
    """Brute-force enumeration refused: the graph is too large."""


class MissingPartitionError(MixedCagesError):
    """The operation needs a part partition but none is attached."""


class HasArcsError(MixedCagesError):
    """The operation is defined for edge-only graphs."""


class ParseError(MixedCagesError):
    """Malformed graph file.  Carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class IndexOutOfBoundsError(ParseError):
    """A vertex index in the file is outside 0..n-1."""


class TemplateInvalidError(MixedCagesError):
    """No instantiation of the short-cycle template validates."""
