"""Pair instances in enumeration order and their parallel scanning."""

from __future__ import annotations

import logging
import math
import random
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import TypeVar

from tqdm import tqdm

from nano_continuity.continuity import FiniteMap
from nano_continuity.core.exceptions import NanoContinuityError
from nano_continuity.space import (
    NanoSpace,
    SetFamily,
    build_nano_topology,
    make_explicit_space,
    make_partition,
    make_universe,
)

from .enumerate import (
    distinct_spaces,
    enumerate_assignments,
    points,
    random_explicit_space,
    random_nano_space,
)
from .models import InstanceBounds, SpaceDescription, SpaceMode

logger = logging.getLogger(__name__)

T = TypeVar("T")

# Spaces drawn per size when a size is only sampled.
SAMPLED_POOL_SIZE = 32
SAMPLED_BLOCK_SIZE = 2_000


@dataclass(frozen=True)
class PairInstance:
    """A map between two spaces with its position in enumeration order."""

    position: int
    domain: NanoSpace
    codomain: NanoSpace
    mapping: FiniteMap


@dataclass(frozen=True)
class PairBlock:
    """A contiguous run of pair instances.

    Each item is a (domain, codomain, assignments) triple; ``None`` stands
    for every assignment in counter order.
    """

    order: int
    start: int
    items: tuple[tuple[NanoSpace, NanoSpace, tuple[tuple[int, ...], ...] | None], ...]
    bijective_only: bool = False

    def __len__(self) -> int:
        """Number of instances in the block."""
        total = 0
        for s_u, s_v, assignments in self.items:
            if assignments is not None:
                total += len(assignments)
            elif self.bijective_only:
                total += math.factorial(s_u.universe.size)
            else:
                total += s_v.universe.size ** s_u.universe.size
        return total

    def instances(self) -> Iterator[PairInstance]:
        """Instances in enumeration order."""
        position = self.start
        for s_u, s_v, assignments in self.items:
            source = (
                enumerate_assignments(
                    s_u.universe.size,
                    s_v.universe.size,
                    bijective_only=self.bijective_only,
                )
                if assignments is None
                else assignments
            )
            for assignment in source:
                yield PairInstance(
                    position,
                    s_u,
                    s_v,
                    FiniteMap(s_u.universe, s_v.universe, assignment),
                )
                position += 1


def size_pairs(max_size: int, *, equal_only: bool = False) -> list[tuple[int, int]]:
    """Domain and codomain sizes, smallest largest-side first."""
    pairs = [
        (m, n)
        for m in range(1, max_size + 1)
        for n in range(1, max_size + 1)
        if not equal_only or m == n
    ]
    return sorted(pairs, key=lambda p: (max(p), p[0], p[1]))


def spaces_for(n: int, bounds: InstanceBounds) -> tuple[NanoSpace, ...]:
    """Distinct spaces scanned exhaustively at size ``n``."""
    return distinct_spaces(n, bounds.mode, bounds.seed, bounds.explicit_sample_count)


def sampled_pool(n: int, bounds: InstanceBounds, tag: str) -> tuple[NanoSpace, ...]:
    """Seeded random spaces on ``n`` points for sampled scans."""
    rng = random.Random(f"pool:{tag}:{bounds.seed}:{bounds.mode.value}:{n}")
    u = points(n)
    spaces = []
    for k in range(SAMPLED_POOL_SIZE):
        if bounds.mode == SpaceMode.NANO or (
            bounds.mode == SpaceMode.BOTH and k % 2 == 0
        ):
            spaces.append(random_nano_space(u, rng))
        else:
            spaces.append(random_explicit_space(u, rng))
    return tuple(spaces)


def random_assignment(
    m: int,
    n: int,
    rng: random.Random,
    *,
    bijective_only: bool,
) -> tuple[int, ...]:
    """A uniformly drawn assignment of ``m`` points into ``n``."""
    if bijective_only:
        order = list(range(n))
        rng.shuffle(order)
        return tuple(order)
    return tuple(rng.randrange(n) for _ in range(m))


def pair_blocks(
    bounds: InstanceBounds,
    *,
    bijective_only: bool = False,
) -> list[PairBlock]:
    """Split every pair instance within ``bounds`` into ordered blocks.

    Size pairs up to ``exhaustive_size`` contribute one block per domain
    space covering every codomain space and map. Larger size pairs share
    ``sample_count`` seeded random instances.
    """
    pairs = size_pairs(bounds.max_size, equal_only=bijective_only)
    sampled = [p for p in pairs if max(p) > bounds.exhaustive_size]
    share = math.ceil(bounds.sample_count / len(sampled)) if sampled else 0

    blocks: list[PairBlock] = []
    start = 0
    for m, n in pairs:
        if max(m, n) <= bounds.exhaustive_size:
            codomains = spaces_for(n, bounds)
            for s_u in spaces_for(m, bounds):
                block = PairBlock(
                    order=len(blocks),
                    start=start,
                    items=tuple((s_u, s_v, None) for s_v in codomains),
                    bijective_only=bijective_only,
                )
                blocks.append(block)
                start += len(block)
            continue

        rng = random.Random(f"pairs:{bounds.seed}:{m}:{n}")
        pool_u = sampled_pool(m, bounds, "domain")
        pool_v = sampled_pool(n, bounds, "codomain")
        drawn = [
            (
                rng.choice(pool_u),
                rng.choice(pool_v),
                (random_assignment(m, n, rng, bijective_only=bijective_only),),
            )
            for _ in range(share)
        ]
        for k in range(0, len(drawn), SAMPLED_BLOCK_SIZE):
            block = PairBlock(
                order=len(blocks),
                start=start,
                items=tuple(drawn[k : k + SAMPLED_BLOCK_SIZE]),
                bijective_only=bijective_only,
            )
            blocks.append(block)
            start += len(block)

    logger.info(
        f"Prepared {len(blocks)} instance blocks, {start} instances, "
        f"{len(sampled)} sampled size pairs",
    )
    return blocks


def iter_instances(
    bounds: InstanceBounds,
    *,
    bijective_only: bool = False,
) -> Iterator[PairInstance]:
    """Every pair instance within ``bounds`` in enumeration order."""
    for block in pair_blocks(bounds, bijective_only=bijective_only):
        yield from block.instances()


def scan_blocks(
    blocks: Sequence[PairBlock],
    fn: Callable[[PairBlock], T],
    workers: int = 1,
    desc: str = "Scanning",
) -> list[T]:
    """Apply ``fn`` to every block and return results in block order.

    With more than one worker, blocks run on a thread pool; results are
    reordered so callers see the sequential order.
    """
    if workers <= 1:
        return [fn(block) for block in tqdm(blocks, desc=desc, disable=None)]

    results: dict[int, T] = {}
    n_task_fail = 0
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(fn, block): block.order for block in blocks}
        for future in tqdm(
            as_completed(futures),
            total=len(futures),
            desc=desc,
            disable=None,
        ):
            try:
                results[futures[future]] = future.result()
            except Exception:  # pylint: disable=broad-exception-caught
                n_task_fail += 1
                logger.exception(f"Block {futures[future]} failed. Reason:")

    if n_task_fail:
        msg = f"{n_task_fail} of {len(blocks)} instance blocks failed"
        raise NanoContinuityError(msg)
    return [results[block.order] for block in blocks]


def describe_space(space: NanoSpace, prefix: str | None = None) -> SpaceDescription:
    """Report form of a space, optionally relabelling points
    ``prefix1 .. prefixN``.
    """
    u = space.universe
    labels = (
        list(u.labels)
        if prefix is None
        else [f"{prefix}{i + 1}" for i in range(u.size)]
    )

    def render(mask: int) -> list[str]:
        return [labels[i] for i in range(u.size) if mask >> i & 1]

    prov = space.provenance
    return SpaceDescription(
        points=labels,
        mode=space.mode,
        classes=None
        if prov is None
        else [render(b) for b in prov.partition.block_masks],
        subset=None if prov is None else render(prov.subset.bits),
        opens=[render(m) for m in space.opens.masks],
    )


def space_from_description(desc: SpaceDescription) -> NanoSpace:
    """Rebuild a space from its report form."""
    u = make_universe(desc.points)
    if desc.classes is not None and desc.subset is not None:
        partition = make_partition(u, [u.subset(block) for block in desc.classes])
        return build_nano_topology(partition, u.subset(desc.subset))
    return make_explicit_space(
        u,
        SetFamily(u, tuple(u.subset(member).bits for member in desc.opens)),
    )
