"""Canonically ordered families of subsets."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from nano_continuity.utils import canonical_key

from .universe import PointSet, Universe


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free family of subsets in canonical order.

    Members are ordered by cardinality, then by characteristic-vector value.
    """

    universe: Universe
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        """Deduplicate and sort members."""
        canonical = tuple(sorted(set(self.masks), key=canonical_key))
        if canonical != self.masks:
            object.__setattr__(self, "masks", canonical)

    @classmethod
    def of(cls, universe: Universe, members: Iterable[PointSet]) -> SetFamily:
        """Build a family from point sets of ``universe``."""
        masks = []
        for member in members:
            universe.require_same(member.universe, "family and member")
            masks.append(member.bits)
        return cls(universe, tuple(masks))

    def __contains__(self, item: object) -> bool:
        """Membership test for point sets of the same universe."""
        if not isinstance(item, PointSet) or item.universe != self.universe:
            return False
        return item.bits in self.masks

    def __len__(self) -> int:
        """Number of members."""
        return len(self.masks)

    def render(self) -> list[list[str]]:
        """Members as label lists."""
        return [self.universe.render(m) for m in self.masks]
