"""Witness construction, search and replay."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping

from nano_continuity.continuity import (
    ContinuityClass,
    FiniteMap,
    classify,
    compose,
    make_map,
)
from nano_continuity.continuity.classify import profile_mask
from nano_continuity.core.exceptions import NanoContinuityError
from nano_continuity.families import family_table
from nano_continuity.space import NanoSpace

from .instances import (
    PairInstance,
    describe_space,
    pair_blocks,
    space_from_description,
)
from .models import InstanceBounds, MapDescription, Witness, WitnessClaim

logger = logging.getLogger(__name__)

SIDE_PREFIXES = {"U": "u", "V": "v", "W": "w"}
COMPOSITE = "h2.h1"


def make_witness(
    label: str,
    position: int,
    spaces: Mapping[str, NanoSpace],
    maps: Mapping[str, tuple[FiniteMap, str, str]],
    claims: Iterable[tuple[str, ContinuityClass, bool]],
    *,
    relabel: bool = True,
) -> Witness:
    """Package spaces, maps and claims as a witness.

    Args:
        label (str): Property pair or clause the witness demonstrates.
        position (int): Index of the instance in enumeration order.
        spaces (Mapping[str, NanoSpace]): Spaces by name (U, V, W).
        maps (Mapping[str, tuple[FiniteMap, str, str]]): Maps by name, with
            the names of their domain and codomain spaces.
        claims (Iterable[tuple[str, ContinuityClass, bool]]): Map name,
            class and whether the map is in the class.
        relabel (bool): Rename points per space (u1.., v1.., w1..) so that
            sides are distinguishable.

    Returns:
        Witness: The report form.

    """

    def prefix(name: str) -> str | None:
        return SIDE_PREFIXES.get(name, name.lower()) if relabel else None

    descriptions = {
        name: describe_space(space, prefix(name)) for name, space in spaces.items()
    }
    map_descriptions = {}
    for name, (h, dom, cod) in maps.items():
        sources = descriptions[dom].points
        targets = descriptions[cod].points
        map_descriptions[name] = MapDescription(
            domain=dom,
            codomain=cod,
            arrows={sources[i]: targets[j] for i, j in enumerate(h.assignment)},
        )
    return Witness(
        label=label,
        position=position,
        spaces=descriptions,
        maps=map_descriptions,
        claims=[
            WitnessClaim(map=m, continuity_class=c, holds=holds)
            for m, c, holds in claims
        ],
    )


def pair_witness(
    label: str,
    instance: PairInstance,
    claims: Iterable[tuple[ContinuityClass, bool]],
) -> Witness:
    """Witness for a single map ``h: U -> V``."""
    return make_witness(
        label,
        instance.position,
        {"U": instance.domain, "V": instance.codomain},
        {"h": (instance.mapping, "U", "V")},
        (("h", c, holds) for c, holds in claims),
    )


def find_witness(
    holds: ContinuityClass,
    fails: ContinuityClass,
    bounds: InstanceBounds,
) -> Witness | None:
    """First instance in enumeration order whose map is in ``holds`` but not
    in ``fails``.

    Returns None when no instance within ``bounds`` qualifies, including
    the vacuous case ``holds == fails``.
    """
    if holds == fails:
        logger.info(f"No witness for {holds.value} without itself (vacuous)")
        return None

    scanned = 0
    for block in pair_blocks(bounds):
        tables: dict[tuple[NanoSpace, NanoSpace], tuple] = {}
        for instance in block.instances():
            key = (instance.domain, instance.codomain)
            if key not in tables:
                tables[key] = (
                    family_table(instance.domain),
                    family_table(instance.codomain),
                )
            mask = profile_mask(instance.mapping, *tables[key])
            scanned += 1
            if mask & holds.bit and not mask & fails.bit:
                logger.info(
                    f"Found {holds.value} without {fails.value} at instance "
                    f"{instance.position} after {scanned} scanned",
                )
                return pair_witness(
                    f"{holds.value} and not {fails.value}",
                    instance,
                    [(holds, True), (fails, False)],
                )

    logger.info(
        f"No instance with {holds.value} and not {fails.value} in "
        f"{scanned} scanned",
    )
    return None


def witness_problems(w: Witness) -> list[str]:
    """Claims of ``w`` that do not reproduce, as messages."""
    try:
        spaces = {
            name: space_from_description(desc) for name, desc in w.spaces.items()
        }
        maps = {
            name: make_map(
                spaces[desc.domain].universe,
                spaces[desc.codomain].universe,
                desc.arrows,
            )
            for name, desc in w.maps.items()
        }
    except (NanoContinuityError, KeyError) as exc:
        return [f"witness {w.label!r} does not rebuild: {exc}"]

    problems = []
    if COMPOSITE in maps and {"h1", "h2"} <= maps.keys():
        if compose(maps["h2"], maps["h1"]) != maps[COMPOSITE]:
            problems.append(f"{COMPOSITE} is not the composite of h2 and h1")

    for claim in w.claims:
        desc = w.maps[claim.map]
        profile = classify(
            maps[claim.map],
            spaces[desc.domain],
            spaces[desc.codomain],
        )
        actual = profile.holds(claim.continuity_class)
        if actual != claim.holds:
            problems.append(
                f"{claim.map} {claim.continuity_class.value}: claimed "
                f"{claim.holds}, replayed {actual}",
            )
    return problems


def replay_witness(w: Witness) -> bool:
    """Rebuild ``w`` from its report form and re-check every claim."""
    problems = witness_problems(w)
    for problem in problems:
        logger.warning(f"Witness {w.label!r}: {problem}")
    return not problems
