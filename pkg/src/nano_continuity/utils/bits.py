"""Functions on characteristic vectors stored as int bitmasks.

Bit ``i`` of a mask is set iff point ``i`` of the owning universe is a member.
"""

from collections.abc import Iterable, Iterator


def popcount(mask: int) -> int:
    """Number of members in a characteristic vector."""
    return mask.bit_count()


def iter_bits(mask: int) -> Iterator[int]:
    """Yield member indices in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    """Build a characteristic vector from point indices."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def is_subset(a: int, b: int) -> bool:
    """Return True if ``a`` is contained in ``b``."""
    return a & ~b == 0


def canonical_key(mask: int) -> tuple[int, int]:
    """Sort key for canonical family order: cardinality, then vector value."""
    return mask.bit_count(), mask
