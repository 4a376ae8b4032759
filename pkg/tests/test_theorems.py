# ruff: noqa: D100, D103, ANN201

from nano_continuity.families import family_table
from nano_continuity.verifier import (
    InstanceBounds,
    SpaceMode,
    check_conditional_theorems,
    check_equivalences,
    check_set_hierarchy,
)
from nano_continuity.verifier.instances import space_from_description


def test_equivalences_hold(small_bounds):
    report = check_equivalences(small_bounds)
    assert report.name == "equivalences"
    assert report.passed
    assert report.discrepancies == []
    assert report.instances > 0
    assert report.observations["subsets"] > 0


def test_equivalences_hold_on_explicit_spaces():
    report = check_equivalences(
        InstanceBounds(max_size=2, mode=SpaceMode.EXPLICIT, sample_count=0),
    )
    assert report.passed


def test_conditional_theorems_hold_on_bijections(small_bounds):
    report = check_conditional_theorems(small_bounds)
    assert report.name == "theorems"
    assert report.passed
    assert report.instances > 0
    assert report.observations["failures"] == {}


def test_set_hierarchy_finds_both_strict_witnesses():
    report = check_set_hierarchy(InstanceBounds(max_size=4, sample_count=0))
    assert report.passed
    assert report.missing_witnesses == []
    labels = [w.label for w in report.set_witnesses]
    assert labels == ["Na-open and not N-open", "NSa-open and not Na-open"]
    for w in report.set_witnesses:
        space = space_from_description(w.space)
        table = family_table(space)
        mask = space.universe.subset(w.subset).bits
        assert table.contains(w.member_of, mask)
        assert not table.contains(w.not_member_of, mask)


def test_set_hierarchy_observations():
    report = check_set_hierarchy(InstanceBounds(max_size=4, sample_count=0))
    observed = report.observations
    assert observed["spaces"] > 0
    assert 0 < observed["nalpha_is_topology"] <= observed["spaces"]
    assert observed["nsalpha_union_closed"] <= observed["spaces"]


def test_set_hierarchy_reports_missing_witnesses():
    report = check_set_hierarchy(InstanceBounds(max_size=1, sample_count=0))
    assert not report.passed
    assert report.missing_witnesses == [
        "Na-open and not N-open",
        "NSa-open and not Na-open",
    ]
