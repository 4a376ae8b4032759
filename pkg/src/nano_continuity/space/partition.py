"""Equivalence partitions and rough-set approximations."""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from typing import NamedTuple

from nano_continuity.core.exceptions import PartitionError

from .universe import PointSet, Universe

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    """The equivalence classes of an indiscernibility relation.

    Blocks are stored as masks ordered by their smallest point, so two
    partitions with the same classes compare equal.
    """

    universe: Universe
    block_masks: tuple[int, ...]

    @property
    def blocks(self) -> list[PointSet]:
        """Blocks as subsets, ordered by smallest member."""
        return [self.universe.point_set(b) for b in self.block_masks]

    def render(self) -> list[list[str]]:
        """Blocks as label lists."""
        return [self.universe.render(b) for b in self.block_masks]


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length()


def make_partition(universe: Universe, blocks: Iterable[PointSet]) -> Partition:
    """Validate blocks as a partition of ``universe``.

    Raises:
        PartitionError: If a block is empty, two blocks overlap or the blocks
            do not cover the universe.
        UniverseMismatchError: If a block belongs to another universe.

    """
    covered = 0
    masks: list[int] = []
    for block in blocks:
        universe.require_same(block.universe, "partition and block")
        if block.bits == 0:
            msg = "Partition blocks must be nonempty"
            raise PartitionError(msg)
        if block.bits & covered:
            overlap = universe.render(block.bits & covered)
            msg = f"Block {block} overlaps an earlier block on {overlap}"
            raise PartitionError(msg)
        covered |= block.bits
        masks.append(block.bits)

    if covered != universe.full_mask:
        missing = universe.render(universe.full_mask & ~covered)
        msg = f"Blocks do not cover the universe, missing {missing}"
        raise PartitionError(msg)

    return Partition(universe, tuple(sorted(masks, key=_lowest)))


class Approximations(NamedTuple):
    """Lower and upper approximations of a subset and its boundary."""

    lower: PointSet
    upper: PointSet
    boundary: PointSet


def approximation_masks(block_masks: Iterable[int], m: int) -> tuple[int, int]:
    """Lower and upper approximation masks of ``m``."""
    lower = upper = 0
    for block in block_masks:
        if block & ~m == 0:
            lower |= block
        if block & m:
            upper |= block
    return lower, upper


def approximations(p: Partition, m: PointSet) -> Approximations:
    """Compute the rough-set approximations of ``m``.

    The lower approximation is the union of blocks contained in ``m``, the
    upper approximation the union of blocks meeting ``m`` and the boundary
    their difference.

    Raises:
        UniverseMismatchError: If ``m`` is not a subset of the partitioned
            universe.

    """
    p.universe.require_same(m.universe, "partition and subset")
    lower, upper = approximation_masks(p.block_masks, m.bits)
    u = p.universe
    return Approximations(
        lower=u.point_set(lower),
        upper=u.point_set(upper),
        boundary=u.point_set(upper & ~lower),
    )
