"""Kinds of open and closed set families."""

from enum import Enum


class FamilyKind(str, Enum):
    """A family of subsets a space singles out."""

    N_OPEN = "N-open"
    NALPHA_OPEN = "Na-open"
    NSALPHA_OPEN = "NSa-open"
    N_CLOSED = "N-closed"
    NALPHA_CLOSED = "Na-closed"
    NSALPHA_CLOSED = "NSa-closed"

    @property
    def is_closed(self) -> bool:
        """True for the complement families."""
        return self.value.endswith("closed")

    @property
    def open_kind(self) -> "FamilyKind":
        """The open kind whose complements form this kind."""
        if not self.is_closed:
            return self
        return FamilyKind(self.value.replace("closed", "open"))
