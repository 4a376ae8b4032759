"""Decide continuity classes and their alternative characterisations."""

from __future__ import annotations

import logging

from nano_continuity.families import FamilyKind, FamilyTable, family_table
from nano_continuity.space import NanoSpace, SetFamily

from .classes import RULES
from .maps import FiniteMap
from .models import ContinuityProfile, NSAlphaCharacterizations

logger = logging.getLogger(__name__)


def _check_universes(h: FiniteMap, s_u: NanoSpace, s_v: NanoSpace) -> None:
    h.domain.require_same(s_u.universe, "map domain and space")
    h.codomain.require_same(s_v.universe, "map codomain and space")


def is_family_continuous(
    h: FiniteMap,
    fam_codomain: SetFamily,
    kind_domain: FamilyKind,
    s_domain: NanoSpace,
) -> bool:
    """Return True if every member of ``fam_codomain`` pulls back into the
    ``kind_domain`` family of ``s_domain``.
    """
    h.codomain.require_same(fam_codomain.universe, "map codomain and family")
    h.domain.require_same(s_domain.universe, "map domain and space")
    allowed = family_table(s_domain).sets[kind_domain]
    return all(h.preimage_mask(m) in allowed for m in fam_codomain.masks)


def profile_mask(h: FiniteMap, t_u: FamilyTable, t_v: FamilyTable) -> int:
    """Class memberships of ``h`` as a bitmask, from precomputed tables."""
    pre = h.preimage_mask
    pulled: dict[FamilyKind, list[int]] = {}
    mask = 0
    for bit, source, target in RULES:
        if source not in pulled:
            pulled[source] = [pre(m) for m in t_v.masks[source]]
        allowed = t_u.sets[target]
        if all(p in allowed for p in pulled[source]):
            mask |= bit
    return mask


def n_open_map_fast(h: FiniteMap, s_u: NanoSpace, opens_v: frozenset[int]) -> bool:
    """Image of every open set of ``s_u`` is in ``opens_v``."""
    return all(h.image_mask(m) in opens_v for m in s_u.opens.masks)


def is_n_open_map(h: FiniteMap, s_u: NanoSpace, s_v: NanoSpace) -> bool:
    """Return True if ``h`` sends every open set of ``s_u`` to an open set."""
    _check_universes(h, s_u, s_v)
    return n_open_map_fast(h, s_u, frozenset(s_v.opens.masks))


def classify(h: FiniteMap, s_u: NanoSpace, s_v: NanoSpace) -> ContinuityProfile:
    """Compute the full continuity profile of ``h: s_u -> s_v``.

    Raises:
        UniverseMismatchError: If the map does not run between the spaces.

    """
    _check_universes(h, s_u, s_v)
    mask = profile_mask(h, family_table(s_u), family_table(s_v))
    profile = ContinuityProfile.from_mask(
        mask,
        n_open_map=is_n_open_map(h, s_u, s_v),
    )
    logger.debug(f"Classified {h.pairs()} as {profile}")
    return profile


def _first_image_failure(h: FiniteMap, s_u: NanoSpace, s_v: NanoSpace) -> int | None:
    interior, closure = s_u.interior_table, s_u.closure_table
    v_closure = s_v.closure_table
    for c in range(s_u.universe.full_mask + 1):
        lhs = h.image_mask(interior[closure[interior[closure[c]]]])
        if lhs & ~v_closure[h.image_mask(c)]:
            return c
    return None


def _first_preimage_failure(
    h: FiniteMap,
    s_u: NanoSpace,
    s_v: NanoSpace,
) -> int | None:
    interior, closure = s_u.interior_table, s_u.closure_table
    v_closure = s_v.closure_table
    for d in range(s_v.universe.full_mask + 1):
        pre = h.preimage_mask(d)
        if interior[closure[interior[closure[pre]]]] & ~h.preimage_mask(
            v_closure[d],
        ):
            return d
    return None


def nsalpha_evaluations(
    h: FiniteMap,
    s_u: NanoSpace,
    s_v: NanoSpace,
) -> tuple[bool, bool, bool, bool, int | None, int | None]:
    """Unwrapped NSa-continuity characterisations for scanning loops.

    Returns the four truth values followed by the first failing domain and
    codomain subsets of the two inclusion forms.
    """
    t_u, t_v = family_table(s_u), family_table(s_v)
    nsalpha_open = t_u.sets[FamilyKind.NSALPHA_OPEN]
    nsalpha_closed = t_u.sets[FamilyKind.NSALPHA_CLOSED]
    definitional = all(
        h.preimage_mask(m) in nsalpha_open for m in t_v.masks[FamilyKind.N_OPEN]
    )
    closed_preimages = all(
        h.preimage_mask(m) in nsalpha_closed
        for m in t_v.masks[FamilyKind.N_CLOSED]
    )
    image_failure = _first_image_failure(h, s_u, s_v)
    preimage_failure = _first_preimage_failure(h, s_u, s_v)
    return (
        definitional,
        closed_preimages,
        image_failure is None,
        preimage_failure is None,
        image_failure,
        preimage_failure,
    )


def nsalpha_characterizations(
    h: FiniteMap,
    s_u: NanoSpace,
    s_v: NanoSpace,
) -> NSAlphaCharacterizations:
    """Evaluate the four equivalent forms of NSa-continuity independently.

    Raises:
        UniverseMismatchError: If the map does not run between the spaces.

    """
    _check_universes(h, s_u, s_v)
    definitional, closed, image_ok, preimage_ok, c, d = nsalpha_evaluations(
        h,
        s_u,
        s_v,
    )
    return NSAlphaCharacterizations(
        definitional=definitional,
        closed_preimages=closed,
        image_inclusion=image_ok,
        preimage_inclusion=preimage_ok,
        image_counterexample=None if c is None else s_u.universe.render(c),
        preimage_counterexample=None if d is None else s_v.universe.render(d),
    )


def interior_inclusion_holds(h: FiniteMap, s_u: NanoSpace, s_v: NanoSpace) -> bool:
    """``h^-1(int D) <= int h^-1(D)`` for every codomain subset ``D``."""
    interior_u, interior_v = s_u.interior_table, s_v.interior_table
    return all(
        h.preimage_mask(interior_v[d]) & ~interior_u[h.preimage_mask(d)] == 0
        for d in range(s_v.universe.full_mask + 1)
    )


def n_continuity_by_interior(h: FiniteMap, s_u: NanoSpace, s_v: NanoSpace) -> bool:
    """Decide N-continuity through the interior inclusion.

    ``h`` is N-continuous iff the preimage of the interior of every subset
    of the codomain lies in the interior of its preimage.

    Raises:
        UniverseMismatchError: If the map does not run between the spaces.

    """
    _check_universes(h, s_u, s_v)
    return interior_inclusion_holds(h, s_u, s_v)
