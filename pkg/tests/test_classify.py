# ruff: noqa: D100, D103, ANN201

import pytest

from nano_continuity.continuity import (
    ContinuityClass,
    ContinuityProfile,
    classify,
    constant_map,
    identity_map,
    is_family_continuous,
    is_n_open_map,
    make_map,
    n_continuity_by_interior,
    nsalpha_characterizations,
)
from nano_continuity.core.exceptions import (
    NanoContinuityError,
    UniverseMismatchError,
)
from nano_continuity.families import FamilyKind, enumerate_family


def test_alpha_map_profile(alpha_map, alpha_domain, alpha_codomain):
    profile = classify(alpha_map, alpha_domain, alpha_codomain)
    assert not profile.n
    assert profile.na
    assert profile.na_star
    assert profile.nsa
    assert not profile.n_open_map


def test_identity_is_in_every_class(space_22):
    profile = classify(identity_map(space_22.universe), space_22, space_22)
    assert all(profile.holds(c) for c in ContinuityClass)
    assert profile.n_open_map


def test_constant_map_is_in_every_class(space_22, alpha_codomain):
    h = constant_map(space_22.universe, alpha_codomain.universe, "s1")
    profile = classify(h, space_22, alpha_codomain)
    assert all(profile.holds(c) for c in ContinuityClass)
    # {s1} is open in the codomain.
    assert profile.n_open_map


def test_n_continuity_by_interior_matches_definition(
    alpha_map,
    alpha_domain,
    alpha_codomain,
    space_22,
):
    assert not n_continuity_by_interior(alpha_map, alpha_domain, alpha_codomain)
    h = identity_map(space_22.universe)
    assert n_continuity_by_interior(h, space_22, space_22)


def test_nsalpha_characterizations_agree(alpha_map, alpha_domain, alpha_codomain):
    result = nsalpha_characterizations(alpha_map, alpha_domain, alpha_codomain)
    assert result.evaluations == (True, True, True, True)
    assert result.agree
    assert result.image_counterexample is None
    assert result.preimage_counterexample is None


def test_nsalpha_characterizations_report_counterexamples(make_nano):
    u_space = make_nano("a b", ["a", "b"], "a")
    v_space = make_nano("x y", ["x", "y"], "y")
    # Swaps the open point: {y} pulls back to {b}, not open.
    h = make_map(u_space.universe, v_space.universe, {"a": "x", "b": "y"})
    result = nsalpha_characterizations(h, u_space, v_space)
    assert result.evaluations == (False, False, False, False)
    assert result.image_counterexample is not None
    assert result.preimage_counterexample is not None


def test_n_open_map(space_22):
    h = identity_map(space_22.universe)
    assert is_n_open_map(h, space_22, space_22)


def test_family_continuity_restates_alpha_star(
    alpha_map,
    alpha_domain,
    alpha_codomain,
):
    fam = enumerate_family(alpha_codomain, FamilyKind.NALPHA_OPEN)
    assert is_family_continuous(alpha_map, fam, FamilyKind.NALPHA_OPEN, alpha_domain)
    opens = enumerate_family(alpha_codomain, FamilyKind.N_OPEN)
    assert not is_family_continuous(alpha_map, opens, FamilyKind.N_OPEN, alpha_domain)


def test_classify_checks_universes(alpha_map, alpha_domain, space_22):
    with pytest.raises(UniverseMismatchError):
        classify(alpha_map, alpha_domain, space_22)


def test_profile_mask_round_trip(alpha_map, alpha_domain, alpha_codomain):
    profile = classify(alpha_map, alpha_domain, alpha_codomain)
    rebuilt = ContinuityProfile.from_mask(profile.mask, n_open_map=False)
    assert rebuilt == profile


def test_profile_serialises_with_report_tokens(space_22):
    profile = classify(identity_map(space_22.universe), space_22, space_22)
    dumped = profile.model_dump(by_alias=True)
    assert set(dumped) == {
        "N",
        "Na",
        "Na*",
        "Na**",
        "NSa",
        "NSa*",
        "NSa**",
        "N-open map",
    }


@pytest.mark.parametrize(
    ("token", "expected"),
    [
        ("Na*", ContinuityClass.NA_STAR),
        ("NA_STAR", ContinuityClass.NA_STAR),
        ("nsa**", ContinuityClass.NSA_2STAR),
        ("n", ContinuityClass.N),
    ],
)
def test_parse_class_tokens(token, expected):
    assert ContinuityClass.parse(token) == expected


def test_parse_unknown_class():
    with pytest.raises(NanoContinuityError, match="Unknown continuity class"):
        ContinuityClass.parse("Nb")


def test_class_families():
    assert ContinuityClass.NA_2STAR.source_kind == FamilyKind.NALPHA_OPEN
    assert ContinuityClass.NA_2STAR.target_kind == FamilyKind.N_OPEN
    assert len({c.bit for c in ContinuityClass}) == 7
