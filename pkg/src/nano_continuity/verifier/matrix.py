"""Empirical implication matrix among the continuity classes."""

from __future__ import annotations

import logging
from itertools import product

from nano_continuity.continuity import ContinuityClass
from nano_continuity.continuity.classify import profile_mask
from nano_continuity.families import family_table
from nano_continuity.space import NanoSpace

from .instances import PairBlock, PairInstance, pair_blocks, scan_blocks
from .models import (
    CellStatus,
    Discrepancy,
    ImplicationMatrix,
    InstanceBounds,
    MatrixCell,
)
from .witness import pair_witness

logger = logging.getLogger(__name__)

C = ContinuityClass

# Implications the text states outright.
STATED_IMPLICATIONS: frozenset[tuple[ContinuityClass, ContinuityClass]] = frozenset(
    {
        (C.N, C.NA),
        (C.N, C.NSA),
        (C.NA, C.NSA),
        (C.NA_STAR, C.NA),
        (C.NA_STAR, C.NSA),
    },
)

# Implications the text states to fail in general.
STATED_NON_IMPLICATIONS: frozenset[tuple[ContinuityClass, ContinuityClass]] = (
    frozenset(
        {
            (C.NA, C.N),
            (C.NSA, C.N),
            (C.NSA, C.NA),
            (C.N, C.NA_STAR),
            (C.NA_STAR, C.N),
            (C.N, C.NSA_STAR),
            (C.NSA_STAR, C.N),
            (C.NA, C.NA_STAR),
            (C.NSA, C.NA_STAR),
            (C.NA_STAR, C.NSA_STAR),
            (C.NSA_STAR, C.NA_STAR),
        },
    )
)


def _first_by_profile(block: PairBlock) -> dict[int, PairInstance]:
    first: dict[int, PairInstance] = {}
    tables: dict[tuple[NanoSpace, NanoSpace], tuple] = {}
    for instance in block.instances():
        key = (instance.domain, instance.codomain)
        if key not in tables:
            tables[key] = (
                family_table(instance.domain),
                family_table(instance.codomain),
            )
        mask = profile_mask(instance.mapping, *tables[key])
        if mask not in first:
            first[mask] = instance
    return first


def implication_matrix(b: InstanceBounds) -> ImplicationMatrix:
    """Scan every instance within ``b`` and fill the implication grid.

    A cell ``A -> B`` is REFUTED by the first instance in enumeration order
    whose map is in ``A`` but not ``B``; otherwise it is PROVED-EMPIRICALLY.
    """
    blocks = pair_blocks(b)
    per_block = scan_blocks(blocks, _first_by_profile, b.workers, "Profiling")

    first: dict[int, PairInstance] = {}
    for found in per_block:
        for mask, instance in found.items():
            if mask not in first:
                first[mask] = instance
    instances = sum(len(block) for block in blocks)
    logger.info(f"{len(first)} distinct profiles over {instances} instances")

    cells = []
    discrepancies = []
    derived = []
    for premise, conclusion in product(ContinuityClass, repeat=2):
        candidates = [
            inst
            for mask, inst in first.items()
            if mask & premise.bit and not mask & conclusion.bit
        ]
        witness = None
        if candidates:
            instance = min(candidates, key=lambda i: i.position)
            witness = pair_witness(
                f"{premise.value} and not {conclusion.value}",
                instance,
                [(premise, True), (conclusion, False)],
            )
        status = CellStatus.REFUTED if witness else CellStatus.PROVED

        stated = None
        pair = (premise, conclusion)
        if pair in STATED_IMPLICATIONS:
            stated = "implies"
            if status == CellStatus.REFUTED:
                discrepancies.append(
                    Discrepancy(
                        check=f"{premise.value} => {conclusion.value}",
                        detail="stated implication refuted",
                        witness=witness,
                    ),
                )
        elif pair in STATED_NON_IMPLICATIONS:
            stated = "independent"
            if status == CellStatus.PROVED:
                discrepancies.append(
                    Discrepancy(
                        check=f"{premise.value} =/=> {conclusion.value}",
                        detail="stated non-implication has no witness in bounds",
                    ),
                )
        elif premise != conclusion and status == CellStatus.PROVED:
            derived.append(f"{premise.value} => {conclusion.value}")

        cells.append(
            MatrixCell(
                premise=premise,
                conclusion=conclusion,
                status=status,
                stated=stated,
                witness=witness,
            ),
        )

    return ImplicationMatrix(
        bounds=b,
        instances=instances,
        cells=cells,
        derived_not_claimed=derived,
        discrepancies=discrepancies,
    )
