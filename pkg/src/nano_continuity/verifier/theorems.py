"""Sweeps checking characterisations and conditional implications on every
instance within bounds.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

from nano_continuity.continuity import ContinuityClass, is_family_continuous
from nano_continuity.continuity.classify import (
    interior_inclusion_holds,
    n_open_map_fast,
    nsalpha_evaluations,
    profile_mask,
)
from nano_continuity.families import FamilyKind, enumerate_family, family_table
from nano_continuity.families.open_sets import nsalpha_existential
from nano_continuity.space import NanoSpace
from nano_continuity.space.nano_space import topology_violation

from .enumerate import distinct_spaces
from .instances import (
    PairBlock,
    describe_space,
    pair_blocks,
    sampled_pool,
    scan_blocks,
)
from .models import CheckReport, Discrepancy, InstanceBounds, SetWitness
from .witness import pair_witness

logger = logging.getLogger(__name__)

C = ContinuityClass
K = FamilyKind

# Discrepancies kept per check; the rest are only counted.
MAX_REPORTED = 20
# Largest size whose spaces are all enumerated for set-level checks.
SET_EXHAUSTIVE_SIZE = 5


@dataclass
class _Tally:
    instances: int = 0
    counts: dict[str, int] = field(default_factory=dict)
    discrepancies: list[Discrepancy] = field(default_factory=list)
    failures: dict[str, int] = field(default_factory=dict)

    def bump(self, key: str, by: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + by

    def fail(self, d: Discrepancy) -> None:
        self.failures[d.check] = self.failures.get(d.check, 0) + 1
        if len(self.discrepancies) < MAX_REPORTED:
            self.discrepancies.append(d)

    def merge(self, other: _Tally) -> None:
        self.instances += other.instances
        for k, v in other.counts.items():
            self.bump(k, v)
        for d in other.discrepancies:
            if len(self.discrepancies) < MAX_REPORTED:
                self.discrepancies.append(d)
        for k, v in other.failures.items():
            self.failures[k] = self.failures.get(k, 0) + v


def _merged(results: list[_Tally]) -> _Tally:
    total = _Tally()
    for tally in results:
        total.merge(tally)
    return total


def _equivalences_block(block: PairBlock) -> _Tally:
    tally = _Tally()
    for instance in block.instances():
        h, s_u, s_v = instance.mapping, instance.domain, instance.codomain
        tally.instances += 1

        values = nsalpha_evaluations(h, s_u, s_v)
        if len(set(values[:4])) == 1:
            tally.bump("nsa_characterisations_agree")
        else:
            c, d = values[4], values[5]
            tally.fail(
                Discrepancy(
                    check="nsa-continuity-characterisations",
                    detail=f"evaluations disagree: {list(values[:4])}",
                    witness=pair_witness(
                        "nsa-continuity-characterisations",
                        instance,
                        [(C.NSA, values[0])],
                    ),
                    data={
                        "definitional": values[0],
                        "closed_preimages": values[1],
                        "image_inclusion": values[2],
                        "preimage_inclusion": values[3],
                        "image_counterexample": None
                        if c is None
                        else s_u.universe.render(c),
                        "preimage_counterexample": None
                        if d is None
                        else s_v.universe.render(d),
                    },
                ),
            )

        n_flag = bool(
            profile_mask(h, family_table(s_u), family_table(s_v)) & C.N.bit,
        )
        by_interior = interior_inclusion_holds(h, s_u, s_v)
        if n_flag == by_interior:
            tally.bump("interior_inclusion_agrees")
        else:
            tally.fail(
                Discrepancy(
                    check="n-continuity-interior-inclusion",
                    detail=(
                        f"N-continuous is {n_flag} but the interior "
                        f"inclusion gives {by_interior}"
                    ),
                    witness=pair_witness(
                        "n-continuity-interior-inclusion",
                        instance,
                        [(C.N, n_flag)],
                    ),
                ),
            )
    return tally


def set_spaces(n: int, bounds: InstanceBounds) -> tuple[NanoSpace, ...]:
    """Spaces of size ``n`` scanned by set-level checks."""
    if n <= SET_EXHAUSTIVE_SIZE:
        return distinct_spaces(
            n,
            bounds.mode,
            bounds.seed,
            bounds.explicit_sample_count,
        )
    return sampled_pool(n, bounds, "sets")


def _nsalpha_open_agreement(bounds: InstanceBounds, tally: _Tally) -> None:
    for n in range(1, bounds.max_size + 1):
        for space in set_spaces(n, bounds):
            table = family_table(space)
            nalpha = table.masks[K.NALPHA_OPEN]
            nsalpha = table.sets[K.NSALPHA_OPEN]
            for mask in range(space.universe.full_mask + 1):
                tally.bump("subsets")
                formula = mask in nsalpha
                if formula == nsalpha_existential(space, mask, nalpha):
                    continue
                tally.fail(
                    Discrepancy(
                        check="nsa-open-characterisations",
                        detail=(
                            f"closure formula gives {formula} for "
                            f"{space.universe.render(mask)}"
                        ),
                        data={"space": describe_space(space).model_dump()},
                    ),
                )


def check_equivalences(b: InstanceBounds) -> CheckReport:
    """Check that equivalent characterisations agree on every instance.

    Per map: the four NSa-continuity characterisations coincide and the
    interior inclusion decides N-continuity. Per subset of every scanned
    space: both NSa-open tests coincide.
    """
    blocks = pair_blocks(b)
    tally = _merged(scan_blocks(blocks, _equivalences_block, b.workers, "Equivalences"))
    _nsalpha_open_agreement(b, tally)
    logger.info(
        f"Equivalences: {tally.instances} instances, "
        f"{sum(tally.failures.values())} discrepancies",
    )
    return CheckReport(
        name="equivalences",
        bounds=b,
        instances=tally.instances,
        discrepancies=tally.discrepancies,
        observations={**tally.counts, "failures": tally.failures},
    )


def _conditional_block(block: PairBlock) -> _Tally:
    tally = _Tally()
    for instance in block.instances():
        h, s_u, s_v = instance.mapping, instance.domain, instance.codomain
        t_u, t_v = family_table(s_u), family_table(s_v)
        tally.instances += 1
        mask = profile_mask(h, t_u, t_v)
        open_map = n_open_map_fast(h, s_u, t_v.sets[K.N_OPEN])

        clauses = (
            ("open-continuous-bijection => Na*", C.N, C.NA_STAR),
            ("open-Na*-bijection => NSa*", C.NA_STAR, C.NSA_STAR),
        )
        for check, premise, conclusion in clauses:
            if not (open_map and mask & premise.bit):
                continue
            tally.bump(f"hypotheses: {check}")
            if not mask & conclusion.bit:
                tally.fail(
                    Discrepancy(
                        check=check,
                        detail="hypotheses hold but the conclusion fails",
                        witness=pair_witness(
                            check,
                            instance,
                            [(premise, True), (conclusion, False)],
                        ),
                    ),
                )

        restatements = (
            ("Na* as continuity of the Na-open families", C.NA_STAR, K.NALPHA_OPEN),
            ("NSa* as continuity of the NSa-open families", C.NSA_STAR, K.NSALPHA_OPEN),
        )
        for check, cls, kind in restatements:
            by_family = is_family_continuous(h, enumerate_family(s_v, kind), kind, s_u)
            if by_family == bool(mask & cls.bit):
                tally.bump(f"agree: {check}")
            else:
                tally.fail(
                    Discrepancy(
                        check=check,
                        detail=f"family check gives {by_family}",
                        witness=pair_witness(
                            check,
                            instance,
                            [(cls, bool(mask & cls.bit))],
                        ),
                    ),
                )
    return tally


def check_conditional_theorems(b: InstanceBounds) -> CheckReport:
    """Check the implications that assume an open, bijective map.

    Over every bijection with equal sizes: an N-open, N-continuous bijection
    is Na*-continuous, and an N-open, Na*-continuous bijection is
    NSa*-continuous. The Na* and NSa* classes are also re-evaluated as plain
    continuity between the matching families; those agree by construction.
    """
    blocks = pair_blocks(b, bijective_only=True)
    tally = _merged(
        scan_blocks(blocks, _conditional_block, b.workers, "Conditional"),
    )
    logger.info(
        f"Conditional implications: {tally.instances} bijections, "
        f"{sum(tally.failures.values())} violations",
    )
    return CheckReport(
        name="theorems",
        bounds=b,
        instances=tally.instances,
        discrepancies=tally.discrepancies,
        observations={**tally.counts, "failures": tally.failures},
    )


def _closed_under(masks: tuple[int, ...], members: frozenset[int]) -> tuple[bool, bool]:
    unions = intersections = True
    for i, a in enumerate(masks):
        for bm in masks[i + 1 :]:
            unions = unions and (a | bm) in members
            intersections = intersections and (a & bm) in members
        if not unions and not intersections:
            break
    return unions, intersections


def check_set_hierarchy(b: InstanceBounds) -> CheckReport:
    """Check the set-level hierarchy on every subset of every scanned space.

    N-open sets are Na-open and Na-open sets are NSa-open; both NSa-open
    tests agree; sets that are Na-open but not N-open and NSa-open but not
    Na-open exist. Also measures whether the Na-open family is a topology
    and whether the NSa-open family is closed under union and intersection.
    """
    tally = _Tally()
    first: dict[str, SetWitness] = {}
    observed: dict[str, Any] = {
        "spaces": 0,
        "nalpha_is_topology": 0,
        "nsalpha_union_closed": 0,
        "nsalpha_intersection_closed": 0,
    }
    strict = (
        ("Na-open and not N-open", K.NALPHA_OPEN, K.N_OPEN),
        ("NSa-open and not Na-open", K.NSALPHA_OPEN, K.NALPHA_OPEN),
    )
    chain = ((K.N_OPEN, K.NALPHA_OPEN), (K.NALPHA_OPEN, K.NSALPHA_OPEN))

    for n in range(1, b.max_size + 1):
        for space in set_spaces(n, b):
            observed["spaces"] += 1
            table = family_table(space)
            for mask in range(space.universe.full_mask + 1):
                tally.instances += 1
                for low, high in chain:
                    if table.contains(low, mask) and not table.contains(high, mask):
                        tally.fail(
                            Discrepancy(
                                check=f"{low.value} => {high.value}",
                                detail=f"{space.universe.render(mask)} breaks it",
                                data={"space": describe_space(space).model_dump()},
                            ),
                        )
                for label, member, other in strict:
                    if (
                        label not in first
                        and table.contains(member, mask)
                        and not table.contains(other, mask)
                    ):
                        first[label] = SetWitness(
                            label=label,
                            space=describe_space(space),
                            subset=space.universe.render(mask),
                            member_of=member,
                            not_member_of=other,
                        )

            if topology_violation(space.universe, table.masks[K.NALPHA_OPEN]) is None:
                observed["nalpha_is_topology"] += 1
            unions, intersections = _closed_under(
                table.masks[K.NSALPHA_OPEN],
                table.sets[K.NSALPHA_OPEN],
            )
            observed["nsalpha_union_closed"] += unions
            observed["nsalpha_intersection_closed"] += intersections
            if not intersections and "nsalpha_intersection_counterexample" not in observed:
                observed["nsalpha_intersection_counterexample"] = (
                    describe_space(space).model_dump()
                )

    _nsalpha_open_agreement(b, tally)
    missing = [label for label, _, _ in strict if label not in first]
    logger.info(
        f"Set hierarchy: {observed['spaces']} spaces, {tally.instances} subsets, "
        f"{sum(tally.failures.values())} violations",
    )
    return CheckReport(
        name="families",
        bounds=b,
        instances=tally.instances,
        discrepancies=tally.discrepancies,
        set_witnesses=[first[label] for label, _, _ in strict if label in first],
        missing_witnesses=missing,
        observations={**observed, **tally.counts, "failures": tally.failures},
    )
