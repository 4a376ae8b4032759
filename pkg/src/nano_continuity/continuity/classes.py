"""The seven continuity classes.

A map ``h: U -> V`` is in a class when the preimage of every member of a
codomain family lies in a domain family:

=======  ==============  =============
class    codomain sets   preimages are
=======  ==============  =============
N        N-open          N-open
Na       N-open          Na-open
Na*      Na-open         Na-open
Na**     Na-open         N-open
NSa      N-open          NSa-open
NSa*     NSa-open        NSa-open
NSa**    NSa-open        N-open
=======  ==============  =============
"""

from __future__ import annotations

from enum import Enum

from nano_continuity.core.exceptions import NanoContinuityError
from nano_continuity.families import FamilyKind


class ContinuityClass(str, Enum):
    """Continuity classes named by their ASCII report tokens."""

    N = "N"
    NA = "Na"
    NA_STAR = "Na*"
    NA_2STAR = "Na**"
    NSA = "NSa"
    NSA_STAR = "NSa*"
    NSA_2STAR = "NSa**"

    @property
    def source_kind(self) -> FamilyKind:
        """The codomain family whose members are pulled back."""
        return _FAMILIES[self][0]

    @property
    def target_kind(self) -> FamilyKind:
        """The domain family preimages must belong to."""
        return _FAMILIES[self][1]

    @property
    def bit(self) -> int:
        """Position of this class in a profile mask."""
        return 1 << _ORDER.index(self)

    @property
    def field_name(self) -> str:
        """Attribute name on ``ContinuityProfile``."""
        return self.name.lower()

    @classmethod
    def parse(cls, token: str) -> ContinuityClass:
        """Resolve a report token or enum name, ignoring case."""
        for member in cls:
            if token in (member.value, member.name):
                return member
        lowered = token.lower()
        for member in cls:
            if lowered in (member.value.lower(), member.name.lower()):
                return member
        msg = (
            f"Unknown continuity class {token!r}, expected one of "
            f"{[m.value for m in cls]}"
        )
        raise NanoContinuityError(msg)


_FAMILIES: dict[ContinuityClass, tuple[FamilyKind, FamilyKind]] = {
    ContinuityClass.N: (FamilyKind.N_OPEN, FamilyKind.N_OPEN),
    ContinuityClass.NA: (FamilyKind.N_OPEN, FamilyKind.NALPHA_OPEN),
    ContinuityClass.NA_STAR: (FamilyKind.NALPHA_OPEN, FamilyKind.NALPHA_OPEN),
    ContinuityClass.NA_2STAR: (FamilyKind.NALPHA_OPEN, FamilyKind.N_OPEN),
    ContinuityClass.NSA: (FamilyKind.N_OPEN, FamilyKind.NSALPHA_OPEN),
    ContinuityClass.NSA_STAR: (FamilyKind.NSALPHA_OPEN, FamilyKind.NSALPHA_OPEN),
    ContinuityClass.NSA_2STAR: (FamilyKind.NSALPHA_OPEN, FamilyKind.N_OPEN),
}

_ORDER: tuple[ContinuityClass, ...] = tuple(ContinuityClass)

# (bit, codomain kind, domain kind) in class order
RULES: tuple[tuple[int, FamilyKind, FamilyKind], ...] = tuple(
    (1 << i, *_FAMILIES[c]) for i, c in enumerate(_ORDER)
)
