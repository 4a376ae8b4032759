"""Finite topological spaces with optional rough-set provenance."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from nano_continuity.core.exceptions import TopologyAxiomError

from .family import SetFamily
from .partition import Partition, approximation_masks
from .universe import PointSet, Universe

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Provenance:
    """The partition and subset a nano topology was generated from."""

    partition: Partition
    subset: PointSet
    lower: PointSet
    upper: PointSet
    boundary: PointSet


def topology_violation(universe: Universe, masks: tuple[int, ...]) -> str | None:
    """Describe the first topology axiom ``masks`` breaks, if any."""
    members = set(masks)
    if 0 not in members:
        return "the empty set is missing"
    if universe.full_mask not in members:
        return "the full universe is missing"
    for a, b in combinations(masks, 2):
        if a | b not in members:
            return (
                f"{universe.render(a)} | {universe.render(b)} = "
                f"{universe.render(a | b)} is missing"
            )
        if a & b not in members:
            return (
                f"{universe.render(a)} & {universe.render(b)} = "
                f"{universe.render(a & b)} is missing"
            )
    return None


@dataclass(frozen=True)
class NanoSpace:
    """A finite topology on a universe.

    Spaces built from a partition and subset carry their ``provenance``;
    spaces given by an explicit open family do not.
    """

    universe: Universe
    opens: SetFamily
    provenance: Provenance | None = None

    def __post_init__(self) -> None:
        """Check the topology axioms and the provenance invariants."""
        self.universe.require_same(self.opens.universe, "space and opens")
        problem = topology_violation(self.universe, self.opens.masks)
        if problem is not None:
            msg = f"Open family is not a topology: {problem}"
            raise TopologyAxiomError(msg)

        if self.provenance is None:
            return
        prov = self.provenance
        lower, upper = prov.lower.bits, prov.upper.bits
        expected = SetFamily(
            self.universe,
            (0, self.universe.full_mask, lower, upper, prov.boundary.bits),
        )
        if (
            expected != self.opens
            or lower & ~prov.subset.bits
            or prov.subset.bits & ~upper
            or prov.boundary.bits != upper & ~lower
        ):
            msg = "Provenance does not generate the open family"
            raise TopologyAxiomError(msg)

    def __hash__(self) -> int:
        """Hash once; spaces key the family-table cache."""
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.universe, self.opens, self.provenance))

    @property
    def mode(self) -> str:
        """``nano`` when derived from approximations, else ``explicit``."""
        return "explicit" if self.provenance is None else "nano"

    @property
    def open_masks(self) -> tuple[int, ...]:
        """Open sets as masks in canonical order."""
        return self.opens.masks

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Complements of the open sets."""
        full = self.universe.full_mask
        return SetFamily(
            self.universe,
            tuple(full & ~m for m in self.opens.masks),
        ).masks

    def interior_mask(self, mask: int) -> int:
        """Union of all open sets contained in ``mask``."""
        result = 0
        for open_ in self.opens.masks:
            if open_ & ~mask == 0:
                result |= open_
        return result

    def closure_mask(self, mask: int) -> int:
        """Intersection of all closed sets containing ``mask``."""
        result = self.universe.full_mask
        for closed in self.closed_masks:
            if mask & ~closed == 0:
                result &= closed
        return result

    @cached_property
    def interior_table(self) -> tuple[int, ...]:
        """Interior of every subset, indexed by characteristic vector."""
        return tuple(
            self.interior_mask(m) for m in range(self.universe.full_mask + 1)
        )

    @cached_property
    def closure_table(self) -> tuple[int, ...]:
        """Closure of every subset, indexed by characteristic vector."""
        full = self.universe.full_mask
        interior = self.interior_table
        return tuple(full & ~interior[full & ~m] for m in range(full + 1))


def build_nano_topology(p: Partition, m: PointSet) -> NanoSpace:
    """Build the nano topology generated by ``p`` and ``m``.

    The opens are the empty set, the universe and the lower approximation,
    upper approximation and boundary of ``m``, with duplicates removed.

    Raises:
        UniverseMismatchError: If ``m`` lives in another universe.

    """
    u = p.universe
    u.require_same(m.universe, "partition and subset")
    lower, upper = approximation_masks(p.block_masks, m.bits)
    boundary = upper & ~lower
    return NanoSpace(
        universe=u,
        opens=SetFamily(u, (0, u.full_mask, lower, upper, boundary)),
        provenance=Provenance(
            partition=p,
            subset=m,
            lower=u.point_set(lower),
            upper=u.point_set(upper),
            boundary=u.point_set(boundary),
        ),
    )


def make_explicit_space(u: Universe, opens: SetFamily) -> NanoSpace:
    """Validate an explicitly given open family as a topology.

    Raises:
        TopologyAxiomError: Naming the first missing union or intersection.
        UniverseMismatchError: If ``opens`` is over another universe.

    """
    return NanoSpace(universe=u, opens=opens)


def n_interior(s: NanoSpace, a: PointSet) -> PointSet:
    """Nano interior: the largest open set contained in ``a``."""
    s.universe.require_same(a.universe, "space and subset")
    return s.universe.point_set(s.interior_table[a.bits])


def n_closure(s: NanoSpace, a: PointSet) -> PointSet:
    """Nano closure: the smallest closed set containing ``a``."""
    s.universe.require_same(a.universe, "space and subset")
    return s.universe.point_set(s.closure_table[a.bits])
