"""Labelled finite universes and their subsets."""

from __future__ import annotations

import logging
import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

from nano_continuity.core.config import config
from nano_continuity.core.exceptions import (
    UniverseError,
    UniverseMismatchError,
)
from nano_continuity.utils import iter_bits, mask_of

logger = logging.getLogger(__name__)

# Characters the space and map file syntax gives a meaning to.
RESERVED_LABEL = re.compile(r"[\[\]#,:\s]|->")
WHOLE_UNIVERSE_LABEL = "*"


@dataclass(frozen=True)
class Universe:
    """An ordered set of distinct point labels.

    Point ``i`` is ``labels[i]``; subsets are stored as int bitmasks over
    these indices.
    """

    labels: tuple[str, ...]

    @property
    def size(self) -> int:
        """Number of points."""
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        """Characteristic vector of the whole universe."""
        return (1 << len(self.labels)) - 1

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index(self, label: str) -> int:
        """Return the index of a point label.

        Raises:
            UniverseError: If the label is not a point of this universe.

        """
        try:
            return self._positions[label]
        except KeyError as exc:
            msg = f"Unknown label {label!r}, expected one of {list(self.labels)}"
            raise UniverseError(msg) from exc

    def point_set(self, mask: int) -> PointSet:
        """Wrap a characteristic vector as a subset of this universe."""
        return PointSet(self, mask)

    def subset(self, labels: Iterable[str]) -> PointSet:
        """Build the subset containing the given labels."""
        return PointSet(self, mask_of(self.index(label) for label in labels))

    def empty(self) -> PointSet:
        """The empty subset."""
        return PointSet(self, 0)

    def full(self) -> PointSet:
        """The universe as a subset of itself."""
        return PointSet(self, self.full_mask)

    def render(self, mask: int) -> list[str]:
        """Labels of the members of ``mask`` in point order."""
        return [self.labels[i] for i in iter_bits(mask)]

    def require_same(self, other: Universe, what: str = "operands") -> None:
        """Raise if ``other`` is not this universe."""
        if other != self:
            msg = (
                f"Universe mismatch between {what}: "
                f"{list(self.labels)} != {list(other.labels)}"
            )
            raise UniverseMismatchError(msg)


def make_universe(labels: Iterable[str], cap: int | None = None) -> Universe:
    """Create a universe with points indexed in the given order.

    Args:
        labels (Iterable[str]): Distinct, nonempty point names.
        cap (int | None): Maximum number of points. Defaults to the
            configured ``universe_cap``.

    Returns:
        Universe: The validated universe.

    Raises:
        UniverseError: If the list is empty, contains a duplicate or empty
            label, a label that clashes with the file syntax,
            or exceeds the cap.

    """
    labels_ = tuple(labels)
    cap_ = config.universe_cap if cap is None else cap

    if not labels_:
        msg = "A universe needs at least one point"
        raise UniverseError(msg)
    if len(labels_) > cap_:
        msg = f"Universe has {len(labels_)} points, the cap is {cap_}"
        raise UniverseError(msg)

    seen: set[str] = set()
    for label in labels_:
        if not isinstance(label, str) or not label:
            msg = f"Point labels must be nonempty strings, got {label!r}"
            raise UniverseError(msg)
        if label == WHOLE_UNIVERSE_LABEL or RESERVED_LABEL.search(label):
            msg = (
                f"Point label {label!r} clashes with the file syntax: no "
                "whitespace, brackets, '#', ',', ':' or '->', and not '*'"
            )
            raise UniverseError(msg)
        if label in seen:
            msg = f"Duplicate label {label!r}"
            raise UniverseError(msg)
        seen.add(label)

    return Universe(labels_)


@dataclass(frozen=True)
class PointSet:
    """A subset of a universe held as a characteristic vector."""

    universe: Universe
    bits: int

    def __post_init__(self) -> None:
        """Reject members outside the universe."""
        if self.bits < 0 or self.bits > self.universe.full_mask:
            msg = (
                f"Characteristic vector {self.bits:#x} has members outside "
                f"a universe of size {self.universe.size}"
            )
            raise UniverseError(msg)

    @property
    def labels(self) -> list[str]:
        """Member labels in point order."""
        return self.universe.render(self.bits)

    def __contains__(self, label: object) -> bool:
        """Return True if the label names a member."""
        if not isinstance(label, str) or label not in self.universe.labels:
            return False
        return bool(self.bits >> self.universe.index(label) & 1)

    def __iter__(self) -> Iterator[str]:
        """Iterate over member labels in point order."""
        return iter(self.labels)

    def __len__(self) -> int:
        """Number of members."""
        return self.bits.bit_count()

    def _other(self, other: PointSet) -> int:
        self.universe.require_same(other.universe, "point sets")
        return other.bits

    def __or__(self, other: PointSet) -> PointSet:
        """Union."""
        return PointSet(self.universe, self.bits | self._other(other))

    def __and__(self, other: PointSet) -> PointSet:
        """Intersection."""
        return PointSet(self.universe, self.bits & self._other(other))

    def __sub__(self, other: PointSet) -> PointSet:
        """Difference."""
        return PointSet(self.universe, self.bits & ~self._other(other))

    def complement(self) -> PointSet:
        """Complement within the owning universe."""
        return PointSet(self.universe, self.universe.full_mask & ~self.bits)

    def issubset(self, other: PointSet) -> bool:
        """Return True if every member of this set is a member of ``other``."""
        return self.bits & ~self._other(other) == 0

    def __le__(self, other: PointSet) -> bool:
        """Subset test."""
        return self.issubset(other)

    def __str__(self) -> str:
        """Render as ``{a, b}``."""
        return "{" + ", ".join(self.labels) + "}"
