"""Membership tests and enumeration for the open-set families of a space.

A set ``A`` is Na-open when ``A <= int(cl(int(A)))`` and NSa-open when
``A <= cl(int(cl(int(A))))``. The NSa test has a second form, the existence
of an Na-open ``P`` with ``P <= A <= cl(P)``, kept as a cross-check.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from nano_continuity.space import NanoSpace, PointSet, SetFamily

from .kinds import FamilyKind

logger = logging.getLogger(__name__)


def _nalpha(s: NanoSpace, mask: int) -> bool:
    interior, closure = s.interior_table, s.closure_table
    return mask & ~interior[closure[interior[mask]]] == 0


def _nsalpha(s: NanoSpace, mask: int) -> bool:
    interior, closure = s.interior_table, s.closure_table
    return mask & ~closure[interior[closure[interior[mask]]]] == 0


def nsalpha_existential(s: NanoSpace, mask: int, nalpha: tuple[int, ...]) -> bool:
    """Some member ``P`` of ``nalpha`` has ``P <= mask <= cl(P)``."""
    closure = s.closure_table
    return any(
        p & ~mask == 0 and mask & ~closure[p] == 0 for p in nalpha
    )


def is_n_open(s: NanoSpace, a: PointSet) -> bool:
    """Return True if ``a`` is one of the open sets of ``s``."""
    s.universe.require_same(a.universe, "space and subset")
    return a.bits in s.opens.masks


def is_nalpha_open(s: NanoSpace, a: PointSet) -> bool:
    """Return True if ``a`` is contained in the interior of the closure of
    its interior.
    """
    s.universe.require_same(a.universe, "space and subset")
    return _nalpha(s, a.bits)


class NSAlphaCheck(NamedTuple):
    """Both evaluations of the semi-alpha-open test."""

    closure_formula: bool
    existential: bool

    @property
    def agree(self) -> bool:
        """True if the two evaluations coincide."""
        return self.closure_formula == self.existential


def nsalpha_open_check(s: NanoSpace, a: PointSet) -> NSAlphaCheck:
    """Evaluate the closure formula and the existential form for ``a``."""
    s.universe.require_same(a.universe, "space and subset")
    table = family_table(s)
    return NSAlphaCheck(
        closure_formula=_nsalpha(s, a.bits),
        existential=nsalpha_existential(
            s, a.bits, table.masks[FamilyKind.NALPHA_OPEN],
        ),
    )


def is_nsalpha_open(s: NanoSpace, a: PointSet) -> bool:
    """Return True if ``a`` is NSa-open.

    The closure formula decides. A disagreement with the existential form is
    logged as a warning.
    """
    check = nsalpha_open_check(s, a)
    if not check.agree:
        logger.warning(
            f"NSa-open characterisations disagree on {a}: "
            f"closure formula {check.closure_formula}, "
            f"existential {check.existential}",
        )
    return check.closure_formula


@dataclass(frozen=True, eq=False)
class FamilyTable:
    """Every family of a space as canonical mask tuples and lookup sets."""

    space: NanoSpace
    masks: dict[FamilyKind, tuple[int, ...]]
    sets: dict[FamilyKind, frozenset[int]]

    def contains(self, kind: FamilyKind, mask: int) -> bool:
        """Membership of a characteristic vector in a family."""
        return mask in self.sets[kind]


@lru_cache(maxsize=8192)
def family_table(s: NanoSpace) -> FamilyTable:
    """Compute all six families of ``s`` in one pass over its subsets."""
    full = s.universe.full_mask
    subsets = range(full + 1)
    nalpha = tuple(m for m in subsets if _nalpha(s, m))
    nsalpha = tuple(m for m in subsets if _nsalpha(s, m))
    opens = {
        FamilyKind.N_OPEN: s.opens.masks,
        FamilyKind.NALPHA_OPEN: SetFamily(s.universe, nalpha).masks,
        FamilyKind.NSALPHA_OPEN: SetFamily(s.universe, nsalpha).masks,
    }
    masks = dict(opens)
    for kind in FamilyKind:
        if kind.is_closed:
            masks[kind] = SetFamily(
                s.universe,
                tuple(full & ~m for m in opens[kind.open_kind]),
            ).masks
    return FamilyTable(
        space=s,
        masks=masks,
        sets={kind: frozenset(v) for kind, v in masks.items()},
    )


def enumerate_family(s: NanoSpace, k: FamilyKind) -> SetFamily:
    """All subsets of ``s`` belonging to family ``k``, in canonical order."""
    return SetFamily(s.universe, family_table(s).masks[k])


def complement_family(s: NanoSpace, f: SetFamily) -> SetFamily:
    """The family of complements of the members of ``f``."""
    s.universe.require_same(f.universe, "space and family")
    full = s.universe.full_mask
    return SetFamily(s.universe, tuple(full & ~m for m in f.masks))
