"""Composition clauses checked over triples of spaces ``U -> V -> W``."""

from __future__ import annotations

import logging
import math
import random
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import product

from nano_continuity.continuity import ContinuityClass, FiniteMap
from nano_continuity.continuity.classify import profile_mask
from nano_continuity.families import family_table
from nano_continuity.space import NanoSpace

from .enumerate import enumerate_assignments
from .instances import random_assignment, sampled_pool, spaces_for
from .models import CheckReport, Discrepancy, InstanceBounds, Witness
from .witness import COMPOSITE, make_witness

logger = logging.getLogger(__name__)

C = ContinuityClass


@dataclass(frozen=True)
class CompositionClause:
    """If ``h1`` is in ``first`` and ``h2`` in ``second`` then ``h2.h1`` is
    in ``conclusion``.
    """

    first: ContinuityClass
    second: ContinuityClass
    conclusion: ContinuityClass

    @property
    def id(self) -> str:
        """Report name of the clause."""
        return (
            f"h1:{self.first.value} h2:{self.second.value} => "
            f"{self.conclusion.value}"
        )


CLAUSES: tuple[CompositionClause, ...] = (
    CompositionClause(C.NA, C.N, C.NA),
    CompositionClause(C.NA_STAR, C.NA, C.NA),
    CompositionClause(C.NA_STAR, C.NA_STAR, C.NA_STAR),
    CompositionClause(C.NSA_STAR, C.NSA_STAR, C.NSA_STAR),
    CompositionClause(C.NA_2STAR, C.NA_2STAR, C.NA_2STAR),
    CompositionClause(C.NSA_2STAR, C.NSA_2STAR, C.NSA_2STAR),
    CompositionClause(C.NA_2STAR, C.NA_STAR, C.NA_2STAR),
    CompositionClause(C.NA_2STAR, C.NA, C.N),
    CompositionClause(C.NA, C.NA_2STAR, C.NA_STAR),
    CompositionClause(C.N, C.NA_2STAR, C.NA_2STAR),
)

# Compositions that can leave the class of both factors.
NON_CLOSED: tuple[CompositionClause, ...] = (
    CompositionClause(C.NA, C.NA, C.NA),
    CompositionClause(C.NSA, C.NSA, C.NSA),
)


@dataclass(frozen=True)
class TripleInstance:
    """Two composable maps with their spaces."""

    position: int
    spaces: tuple[NanoSpace, NanoSpace, NanoSpace]
    first: tuple[int, ...]
    second: tuple[int, ...]

    def witness(self, label: str, claims: list[tuple[str, ContinuityClass, bool]]) -> Witness:
        """Report form with maps h1, h2 and their composite."""
        s_u, s_v, s_w = self.spaces
        h1 = FiniteMap(s_u.universe, s_v.universe, self.first)
        h2 = FiniteMap(s_v.universe, s_w.universe, self.second)
        composite = FiniteMap(
            s_u.universe,
            s_w.universe,
            tuple(self.second[j] for j in self.first),
        )
        return make_witness(
            label,
            self.position,
            {"U": s_u, "V": s_v, "W": s_w},
            {
                "h1": (h1, "U", "V"),
                "h2": (h2, "V", "W"),
                COMPOSITE: (composite, "U", "W"),
            },
            claims,
        )


class _ProfileCache:
    """Profile masks of maps between two spaces, keyed by assignment."""

    def __init__(self) -> None:
        self._pairs: dict[tuple[NanoSpace, NanoSpace], dict[tuple[int, ...], int]] = {}

    def mask(self, s_a: NanoSpace, s_b: NanoSpace, assignment: tuple[int, ...]) -> int:
        by_map = self._pairs.setdefault((s_a, s_b), {})
        found = by_map.get(assignment)
        if found is None:
            found = profile_mask(
                FiniteMap(s_a.universe, s_b.universe, assignment),
                family_table(s_a),
                family_table(s_b),
            )
            by_map[assignment] = found
        return found


def size_triples(max_size: int) -> list[tuple[int, int, int]]:
    """Sizes of ``(U, V, W)``, smallest largest-side first."""
    triples = list(product(range(1, max_size + 1), repeat=3))
    return sorted(triples, key=lambda t: (max(t), *t))


def iter_triples(b: InstanceBounds) -> Iterator[TripleInstance]:
    """Every composable pair of maps within ``b`` in enumeration order.

    Size triples up to ``composition_exhaustive_size`` are exhaustive; larger
    ones share ``sample_count`` seeded random triples.
    """
    triples = size_triples(b.max_size)
    sampled = [t for t in triples if max(t) > b.composition_exhaustive_size]
    share = math.ceil(b.sample_count / len(sampled)) if sampled else 0

    position = 0
    for sizes in triples:
        a, m, c = sizes
        if max(sizes) <= b.composition_exhaustive_size:
            seconds = list(enumerate_assignments(m, c))
            for s_u, s_v, s_w in product(
                spaces_for(a, b),
                spaces_for(m, b),
                spaces_for(c, b),
            ):
                for first in enumerate_assignments(a, m):
                    for second in seconds:
                        yield TripleInstance(position, (s_u, s_v, s_w), first, second)
                        position += 1
            continue

        rng = random.Random(f"triples:{b.seed}:{a}:{m}:{c}")
        pools = (
            sampled_pool(a, b, "domain"),
            sampled_pool(m, b, "middle"),
            sampled_pool(c, b, "codomain"),
        )
        for _ in range(share):
            spaces = (
                rng.choice(pools[0]),
                rng.choice(pools[1]),
                rng.choice(pools[2]),
            )
            yield TripleInstance(
                position,
                spaces,
                random_assignment(a, m, rng, bijective_only=False),
                random_assignment(m, c, rng, bijective_only=False),
            )
            position += 1


def check_compositions(b: InstanceBounds) -> CheckReport:
    """Check the composition clauses and look for compositions that leave
    the Na and NSa classes.

    A clause violation is a discrepancy; a missing non-closure witness is
    reported in ``missing_witnesses``.
    """
    cache = _ProfileCache()
    discrepancies: list[Discrepancy] = []
    hypotheses = {clause.id: 0 for clause in CLAUSES}
    violations = {clause.id: 0 for clause in CLAUSES}
    remarks: dict[str, Witness] = {}
    scanned = 0

    for triple in iter_triples(b):
        scanned += 1
        if scanned % 200_000 == 0:
            logger.info(f"Scanned {scanned} composition triples")
        s_u, s_v, s_w = triple.spaces
        p1 = cache.mask(s_u, s_v, triple.first)
        p2 = cache.mask(s_v, s_w, triple.second)
        composite = tuple(triple.second[j] for j in triple.first)
        p3 = None

        for clause in CLAUSES:
            if not (p1 & clause.first.bit and p2 & clause.second.bit):
                continue
            hypotheses[clause.id] += 1
            if p3 is None:
                p3 = cache.mask(s_u, s_w, composite)
            if p3 & clause.conclusion.bit:
                continue
            violations[clause.id] += 1
            if len(discrepancies) < 20:  # noqa: PLR2004
                discrepancies.append(
                    Discrepancy(
                        check=clause.id,
                        detail="composite is not in the concluded class",
                        witness=triple.witness(
                            clause.id,
                            [
                                ("h1", clause.first, True),
                                ("h2", clause.second, True),
                                (COMPOSITE, clause.conclusion, False),
                            ],
                        ),
                    ),
                )

        for remark in NON_CLOSED:
            label = f"{remark.conclusion.value} not closed under composition"
            if label in remarks:
                continue
            if not (p1 & remark.first.bit and p2 & remark.second.bit):
                continue
            if p3 is None:
                p3 = cache.mask(s_u, s_w, composite)
            if not p3 & remark.conclusion.bit:
                logger.info(f"Found witness: {label} at triple {triple.position}")
                remarks[label] = triple.witness(
                    label,
                    [
                        ("h1", remark.first, True),
                        ("h2", remark.second, True),
                        (COMPOSITE, remark.conclusion, False),
                    ],
                )

    wanted = [f"{r.conclusion.value} not closed under composition" for r in NON_CLOSED]
    logger.info(
        f"Compositions: {scanned} triples, {sum(violations.values())} violations",
    )
    return CheckReport(
        name="compositions",
        bounds=b,
        instances=scanned,
        discrepancies=discrepancies,
        witnesses=[remarks[w] for w in wanted if w in remarks],
        missing_witnesses=[w for w in wanted if w not in remarks],
        observations={"hypotheses": hypotheses, "violations": violations},
    )
