"""Deterministic instance generation.

Partitions come in restricted-growth-string order, subsets by counter and
maps by a base-``|V|`` counter whose most significant digit is the image of
the first domain point.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Iterator
from functools import lru_cache
from itertools import combinations, permutations, product

from nano_continuity.continuity import FiniteMap
from nano_continuity.core.config import config
from nano_continuity.core.exceptions import BoundsError
from nano_continuity.space import (
    NanoSpace,
    Partition,
    SetFamily,
    Universe,
    build_nano_topology,
    make_explicit_space,
    make_universe,
)
from nano_continuity.space.nano_space import topology_violation

from .models import MAX_EXHAUSTIVE_SIZE, SpaceMode

logger = logging.getLogger(__name__)

# Cap on generators for random explicit topologies past exhaustive sizes.
_RANDOM_GENERATORS = 3


def check_size(n: int) -> None:
    """Raise unless ``1 <= n <= universe_cap``."""
    if not 1 <= n <= config.universe_cap:
        msg = f"Size {n} is outside 1..{config.universe_cap}"
        raise BoundsError(msg)


def points(n: int, prefix: str = "x") -> Universe:
    """The universe ``prefix1 .. prefixN``."""
    check_size(n)
    return make_universe([f"{prefix}{i + 1}" for i in range(n)])


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every restricted growth string of length ``n`` in lexicographic
    order.

    Each string ``a`` has ``a[0] == 0`` and ``a[i] <= max(a[:i]) + 1``; it
    encodes the set partition putting point ``i`` in block ``a[i]``.
    """
    if n < 1:
        return

    def extend(prefix: list[int], top: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for value in range(top + 2):
            prefix.append(value)
            yield from extend(prefix, max(top, value))
            prefix.pop()

    yield from extend([0], 0)


def partition_from_rgs(u: Universe, rgs: tuple[int, ...]) -> Partition:
    """The partition of ``u`` a restricted growth string encodes."""
    blocks = [0] * (max(rgs) + 1)
    for i, block in enumerate(rgs):
        blocks[block] |= 1 << i
    return Partition(u, tuple(blocks))


def enumerate_partitions(u: Universe) -> Iterator[Partition]:
    """Every partition of ``u`` in restricted-growth-string order."""
    for rgs in restricted_growth_strings(u.size):
        yield partition_from_rgs(u, rgs)


def enumerate_topologies(u: Universe) -> Iterator[SetFamily]:
    """Every topology on ``u``, selecting proper subsets by counter.

    Only practical up to four points.
    """
    proper = list(range(1, u.full_mask))
    for selector in range(1 << len(proper)):
        masks = (
            0,
            u.full_mask,
            *(m for k, m in enumerate(proper) if selector >> k & 1),
        )
        if topology_violation(u, masks) is None:
            yield SetFamily(u, masks)


def _generated_topology(u: Universe, generators: list[int]) -> SetFamily:
    family = {0, u.full_mask, *generators}
    frontier = True
    while frontier:
        frontier = False
        for a, b in combinations(sorted(family), 2):
            for c in (a | b, a & b):
                if c not in family:
                    family.add(c)
                    frontier = True
    return SetFamily(u, tuple(family))


def random_explicit_space(u: Universe, rng: random.Random) -> NanoSpace:
    """Topology generated by a few random subsets under union and
    intersection.
    """
    count = rng.randint(0, _RANDOM_GENERATORS)
    generators = [rng.getrandbits(u.size) for _ in range(count)]
    return make_explicit_space(u, _generated_topology(u, generators))


def random_nano_space(u: Universe, rng: random.Random) -> NanoSpace:
    """Nano topology of a random partition and subset."""
    labels = [rng.randrange(u.size) for _ in range(u.size)]
    relabel: dict[int, int] = {}
    rgs = tuple(relabel.setdefault(label, len(relabel)) for label in labels)
    return build_nano_topology(
        partition_from_rgs(u, rgs),
        u.point_set(rng.getrandbits(u.size)),
    )


def _explicit_spaces(
    u: Universe,
    seed: int,
    sample_count: int,
) -> Iterator[NanoSpace]:
    if u.size < MAX_EXHAUSTIVE_SIZE:
        for family in enumerate_topologies(u):
            yield make_explicit_space(u, family)
        return

    if u.size == MAX_EXHAUSTIVE_SIZE:
        families = list(enumerate_topologies(u))
        rng = random.Random(f"explicit:{seed}:{u.size}")
        picked = sorted(rng.sample(range(len(families)), min(sample_count, len(families))))
        logger.debug(
            f"Sampled {len(picked)} of {len(families)} topologies on "
            f"{u.size} points",
        )
        for k in picked:
            yield make_explicit_space(u, families[k])
        return

    rng = random.Random(f"explicit:{seed}:{u.size}")
    seen: set[tuple[int, ...]] = set()
    for _ in range(sample_count * 4):
        space = random_explicit_space(u, rng)
        if space.opens.masks in seen:
            continue
        seen.add(space.opens.masks)
        yield space
        if len(seen) >= sample_count:
            return


def enumerate_spaces(
    n: int,
    mode: SpaceMode | str,
    *,
    prefix: str = "x",
    seed: int = 0,
    sample_count: int | None = None,
) -> Iterator[NanoSpace]:
    """Stream spaces on ``n`` points in deterministic order.

    Args:
        n (int): Number of points.
        mode (SpaceMode | str): ``nano`` yields the nano topology of every
            (partition, subset) pair, ``explicit`` every topology for
            ``n < 4`` and a seeded sample beyond, ``both`` the two streams
            one after the other.
        prefix (str): Point label prefix.
        seed (int): Seed for sampled explicit topologies.
        sample_count (int | None): Explicit topologies kept per sampled
            size. Defaults to ``verify.explicit_sample_count``.

    Raises:
        BoundsError: If ``n`` is outside ``1..universe_cap``.

    """
    mode_ = SpaceMode(mode)
    u = points(n, prefix)
    count = (
        config.verify.explicit_sample_count if sample_count is None else sample_count
    )

    if mode_ in (SpaceMode.NANO, SpaceMode.BOTH):
        for partition in enumerate_partitions(u):
            for m in range(u.full_mask + 1):
                yield build_nano_topology(partition, u.point_set(m))
    if mode_ in (SpaceMode.EXPLICIT, SpaceMode.BOTH):
        yield from _explicit_spaces(u, seed, count)


@lru_cache(maxsize=64)
def distinct_spaces(
    n: int,
    mode: SpaceMode,
    seed: int,
    sample_count: int,
) -> tuple[NanoSpace, ...]:
    """First occurrence of every distinct topology ``enumerate_spaces``
    yields, in stream order.
    """
    seen: set[tuple[int, ...]] = set()
    spaces = []
    for space in enumerate_spaces(
        n,
        mode,
        seed=seed,
        sample_count=sample_count,
    ):
        if space.opens.masks not in seen:
            seen.add(space.opens.masks)
            spaces.append(space)
    logger.debug(f"{len(spaces)} distinct {mode.value} spaces on {n} points")
    return tuple(spaces)


def enumerate_assignments(
    m: int,
    n: int,
    *,
    bijective_only: bool = False,
) -> Iterator[tuple[int, ...]]:
    """Assignments of ``m`` points into ``n`` in counter order."""
    if bijective_only:
        if m != n:
            msg = f"No bijections between sizes {m} and {n}"
            raise BoundsError(msg)
        yield from permutations(range(n))
        return
    yield from product(range(n), repeat=m)


def enumerate_maps(
    u: Universe,
    v: Universe,
    *,
    bijective_only: bool = False,
) -> Iterator[FiniteMap]:
    """Every map ``u -> v``, or every bijection when ``bijective_only``.

    Raises:
        BoundsError: If bijections are requested between unequal sizes.

    """
    for assignment in enumerate_assignments(
        u.size,
        v.size,
        bijective_only=bijective_only,
    ):
        yield FiniteMap(u, v, assignment)
