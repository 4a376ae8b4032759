# ruff: noqa: D100, D103, ANN201

from nano_continuity.families import (
    FamilyKind,
    complement_family,
    enumerate_family,
    family_table,
    is_n_open,
    is_nalpha_open,
    is_nsalpha_open,
    nsalpha_open_check,
)
from nano_continuity.space import SetFamily


def test_worked_example_families(space_22):
    opens = enumerate_family(space_22, FamilyKind.N_OPEN)
    assert opens == space_22.opens
    assert enumerate_family(space_22, FamilyKind.NALPHA_OPEN) == opens
    assert enumerate_family(space_22, FamilyKind.NSALPHA_OPEN).render() == [
        [],
        ["r1"],
        ["r1", "r3"],
        ["r2", "r4"],
        ["r1", "r2", "r4"],
        ["r2", "r3", "r4"],
        ["r1", "r2", "r3", "r4"],
    ]


def test_semi_alpha_open_set_that_is_not_alpha_open(space_22):
    a = space_22.universe.subset(["r1", "r3"])
    assert not is_n_open(space_22, a)
    assert not is_nalpha_open(space_22, a)
    assert is_nsalpha_open(space_22, a)
    check = nsalpha_open_check(space_22, a)
    assert check.closure_formula
    assert check.existential
    assert check.agree


def test_alpha_open_set_that_is_not_open(alpha_domain):
    a = alpha_domain.universe.subset(["r1", "r2", "r4"])
    assert not is_n_open(alpha_domain, a)
    assert is_nalpha_open(alpha_domain, a)
    assert is_nsalpha_open(alpha_domain, a)


def test_alpha_open_family_of_indiscrete_core(alpha_domain):
    # Every superset of the one proper open set is Na-open.
    assert enumerate_family(alpha_domain, FamilyKind.NALPHA_OPEN).render() == [
        [],
        ["r1", "r4"],
        ["r1", "r2", "r4"],
        ["r1", "r3", "r4"],
        ["r1", "r2", "r3", "r4"],
    ]


def test_families_are_nested(space_22, alpha_domain):
    for space in (space_22, alpha_domain):
        table = family_table(space)
        n = table.sets[FamilyKind.N_OPEN]
        na = table.sets[FamilyKind.NALPHA_OPEN]
        nsa = table.sets[FamilyKind.NSALPHA_OPEN]
        assert n <= na <= nsa


def test_closed_families_are_complements(space_22):
    for kind in FamilyKind:
        if not kind.is_closed:
            continue
        closed = enumerate_family(space_22, kind)
        opens = enumerate_family(space_22, kind.open_kind)
        assert complement_family(space_22, opens) == closed


def test_n_closed_family(space_22):
    assert enumerate_family(space_22, FamilyKind.N_CLOSED) == SetFamily(
        space_22.universe,
        space_22.closed_masks,
    )


def test_family_kind_properties():
    assert FamilyKind.NSALPHA_CLOSED.is_closed
    assert FamilyKind.NSALPHA_CLOSED.open_kind == FamilyKind.NSALPHA_OPEN
    assert FamilyKind.N_OPEN.open_kind == FamilyKind.N_OPEN


def test_family_table_is_cached(space_22):
    assert family_table(space_22) is family_table(space_22)
    assert family_table(space_22).contains(FamilyKind.N_OPEN, 0b1011)
