"""Custom exceptions."""


class NanoContinuityError(Exception):
    """Base class for all exceptions raised by this package."""


class UniverseError(NanoContinuityError):
    """Raised when a universe or one of its subsets is malformed."""


class UniverseMismatchError(NanoContinuityError):
    """Raised when two objects that must share a universe do not."""


class PartitionError(NanoContinuityError):
    """Raised when blocks do not form a partition of their universe."""


class TopologyAxiomError(NanoContinuityError):
    """Raised if a family of open sets is not a topology."""


class MapError(NanoContinuityError):
    """Raised when a map assignment is not a total function."""


class BoundsError(NanoContinuityError):
    """Raised when instance bounds cannot be honoured."""


class ParseError(NanoContinuityError):
    """Raised when a space or map file cannot be parsed."""

    def __init__(self, msg: str, line: int | None = None) -> None:
        """Prefix the message with the offending line number, if known."""
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)
