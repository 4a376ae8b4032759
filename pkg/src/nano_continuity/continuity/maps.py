"""Total functions between finite universes."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

from nano_continuity.core.exceptions import MapError, UniverseError
from nano_continuity.space import PointSet, Universe
from nano_continuity.utils import iter_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteMap:
    """A map sending domain point ``i`` to codomain point ``assignment[i]``."""

    domain: Universe
    codomain: Universe
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        """Check totality and the range of every image."""
        if len(self.assignment) != self.domain.size:
            msg = (
                f"Map assigns {len(self.assignment)} images to a domain of "
                f"{self.domain.size} points"
            )
            raise MapError(msg)
        for i, j in enumerate(self.assignment):
            if not 0 <= j < self.codomain.size:
                msg = (
                    f"Image {j} of {self.domain.labels[i]!r} is outside a "
                    f"codomain of {self.codomain.size} points"
                )
                raise MapError(msg)

    @property
    def injective(self) -> bool:
        """No two domain points share an image."""
        return len(set(self.assignment)) == len(self.assignment)

    @property
    def surjective(self) -> bool:
        """Every codomain point is hit."""
        return len(set(self.assignment)) == self.codomain.size

    @property
    def bijective(self) -> bool:
        """Both injective and surjective."""
        return self.injective and self.surjective

    @cached_property
    def preimage_table(self) -> tuple[int, ...]:
        """Preimage of every codomain subset, indexed by its vector."""
        point_pre = [0] * self.codomain.size
        for i, j in enumerate(self.assignment):
            point_pre[j] |= 1 << i
        table = [0] * (1 << self.codomain.size)
        for mask in range(1, len(table)):
            low = mask & -mask
            table[mask] = table[mask ^ low] | point_pre[low.bit_length() - 1]
        return tuple(table)

    def preimage_mask(self, mask: int) -> int:
        """Preimage of a codomain characteristic vector."""
        if self.codomain.size <= 12:  # noqa: PLR2004
            return self.preimage_table[mask]
        result = 0
        for i, j in enumerate(self.assignment):
            if mask >> j & 1:
                result |= 1 << i
        return result

    def image_mask(self, mask: int) -> int:
        """Image of a domain characteristic vector."""
        result = 0
        for i in iter_bits(mask):
            result |= 1 << self.assignment[i]
        return result

    def pairs(self) -> list[tuple[str, str]]:
        """The assignment as ``(source, target)`` label pairs."""
        return [
            (self.domain.labels[i], self.codomain.labels[j])
            for i, j in enumerate(self.assignment)
        ]


def make_map(
    domain: Universe,
    codomain: Universe,
    pairs: Mapping[str, str] | Iterable[tuple[str, str]],
) -> FiniteMap:
    """Build a map from ``source -> target`` label pairs.

    Args:
        domain (Universe): The source universe.
        codomain (Universe): The target universe.
        pairs (Mapping[str, str] | Iterable[tuple[str, str]]): One image per
            domain label.

    Returns:
        FiniteMap: The validated map.

    Raises:
        MapError: If a domain label is unknown, mapped twice or not mapped,
            or a target label is not in the codomain.

    """
    items = pairs.items() if isinstance(pairs, Mapping) else pairs
    images: dict[int, int] = {}
    for source, target in items:
        try:
            i = domain.index(source)
        except UniverseError as exc:
            msg = f"Unknown domain label {source!r}"
            raise MapError(msg) from exc
        try:
            j = codomain.index(target)
        except UniverseError as exc:
            msg = f"Unknown codomain label {target!r} for {source!r}"
            raise MapError(msg) from exc
        if i in images:
            msg = f"Domain label {source!r} is mapped more than once"
            raise MapError(msg)
        images[i] = j

    missing = [domain.labels[i] for i in range(domain.size) if i not in images]
    if missing:
        msg = f"Map is not total, no image for {missing}"
        raise MapError(msg)

    return FiniteMap(domain, codomain, tuple(images[i] for i in range(domain.size)))


def preimage(h: FiniteMap, b: PointSet) -> PointSet:
    """The set of domain points whose image lies in ``b``."""
    h.codomain.require_same(b.universe, "map codomain and subset")
    return h.domain.point_set(h.preimage_mask(b.bits))


def image(h: FiniteMap, a: PointSet) -> PointSet:
    """The set of images of the points of ``a``."""
    h.domain.require_same(a.universe, "map domain and subset")
    return h.codomain.point_set(h.image_mask(a.bits))


def compose(h2: FiniteMap, h1: FiniteMap) -> FiniteMap:
    """The map ``x -> h2(h1(x))``."""
    h1.codomain.require_same(h2.domain, "composed maps")
    return FiniteMap(
        h1.domain,
        h2.codomain,
        tuple(h2.assignment[j] for j in h1.assignment),
    )


def identity_map(u: Universe) -> FiniteMap:
    """The identity on ``u``."""
    return FiniteMap(u, u, tuple(range(u.size)))


def constant_map(domain: Universe, codomain: Universe, target: str) -> FiniteMap:
    """The map sending every domain point to ``target``."""
    try:
        j = codomain.index(target)
    except UniverseError as exc:
        msg = f"Unknown codomain label {target!r}"
        raise MapError(msg) from exc
    return FiniteMap(domain, codomain, (j,) * domain.size)
