# ruff: noqa: D100, D103, ANN201

import pytest

from nano_continuity.core.exceptions import (
    PartitionError,
    TopologyAxiomError,
    UniverseError,
    UniverseMismatchError,
)
from nano_continuity.space import (
    SetFamily,
    approximations,
    build_nano_topology,
    make_explicit_space,
    make_partition,
    make_universe,
    n_closure,
    n_interior,
)


def test_universe_indexes_labels_in_order():
    u = make_universe(["a", "b", "c"])
    assert u.size == 3
    assert u.full_mask == 0b111
    assert u.index("c") == 2
    assert u.render(0b101) == ["a", "c"]


@pytest.mark.parametrize(
    "labels",
    [
        [],
        ["a", "a"],
        ["a", ""],
        ["*", "a"],
        ["a b"],
        ["[a"],
        ["a]"],
        ["a#"],
        ["a,b"],
        ["a:b"],
        ["a->b"],
        ["a\tb"],
    ],
)
def test_make_universe_rejects_bad_labels(labels):
    with pytest.raises(UniverseError):
        make_universe(labels)


def test_make_universe_enforces_cap():
    with pytest.raises(UniverseError, match="cap"):
        make_universe(["a", "b", "c"], cap=2)


def test_unknown_label_is_reported():
    u = make_universe(["a", "b"])
    with pytest.raises(UniverseError, match="'z'"):
        u.subset(["z"])


def test_point_set_algebra():
    u = make_universe(["a", "b", "c"])
    ab = u.subset(["a", "b"])
    bc = u.subset(["b", "c"])
    assert (ab | bc) == u.full()
    assert (ab & bc).labels == ["b"]
    assert (ab - bc).labels == ["a"]
    assert ab.complement().labels == ["c"]
    assert (ab & bc) <= ab
    assert not ab.issubset(bc)
    assert "a" in ab
    assert "c" not in ab
    assert len(ab) == 2
    assert str(ab) == "{a, b}"
    assert str(u.empty()) == "{}"


def test_point_sets_of_different_universes_do_not_mix():
    a = make_universe(["a"]).full()
    b = make_universe(["b"]).full()
    with pytest.raises(UniverseMismatchError):
        _ = a | b


def test_partition_blocks_are_ordered_by_smallest_point():
    u = make_universe(["r1", "r2", "r3", "r4"])
    p = make_partition(
        u,
        [u.subset(["r2", "r4"]), u.subset(["r3"]), u.subset(["r1"])],
    )
    assert p.render() == [["r1"], ["r2", "r4"], ["r3"]]


def test_partition_must_cover():
    u = make_universe(["a", "b"])
    with pytest.raises(PartitionError, match="cover"):
        make_partition(u, [u.subset(["a"])])


def test_partition_blocks_must_be_disjoint():
    u = make_universe(["a", "b"])
    with pytest.raises(PartitionError, match="overlaps"):
        make_partition(u, [u.subset(["a", "b"]), u.subset(["b"])])


def test_partition_blocks_must_be_nonempty():
    u = make_universe(["a"])
    with pytest.raises(PartitionError, match="nonempty"):
        make_partition(u, [u.subset(["a"]), u.empty()])


def test_approximations_of_worked_example(space_22):
    prov = space_22.provenance
    result = approximations(prov.partition, prov.subset)
    assert result.lower.labels == ["r1"]
    assert result.upper.labels == ["r1", "r2", "r4"]
    assert result.boundary.labels == ["r2", "r4"]


def test_nano_topology_of_worked_example(space_22):
    assert space_22.mode == "nano"
    assert space_22.opens.render() == [
        [],
        ["r1"],
        ["r2", "r4"],
        ["r1", "r2", "r4"],
        ["r1", "r2", "r3", "r4"],
    ]


def test_discrete_partition_gives_subset_and_universe():
    u = make_universe(["a", "b", "c"])
    p = make_partition(u, [u.subset([x]) for x in "abc"])
    s = build_nano_topology(p, u.subset(["a"]))
    assert s.opens.render() == [[], ["a"], ["a", "b", "c"]]


@pytest.mark.parametrize("subset", [[], ["a", "b", "c"]])
def test_trivial_subsets_give_indiscrete_topology(subset):
    u = make_universe(["a", "b", "c"])
    p = make_partition(u, [u.subset(["a", "b"]), u.subset(["c"])])
    s = build_nano_topology(p, u.subset(subset))
    assert s.opens.masks == (0, u.full_mask)


def test_interior_and_closure(space_22):
    u = space_22.universe
    assert n_interior(space_22, u.subset(["r1", "r3"])).labels == ["r1"]
    assert n_closure(space_22, u.subset(["r1"])).labels == ["r1", "r3"]
    assert n_closure(space_22, u.subset(["r2"])).labels == ["r2", "r3", "r4"]
    assert n_interior(space_22, u.subset(["r3"])).labels == []
    assert n_closure(space_22, u.empty()) == u.empty()
    assert n_interior(space_22, u.full()) == u.full()


def test_closed_sets_are_complements(space_22):
    assert SetFamily(space_22.universe, space_22.closed_masks).render() == [
        [],
        ["r3"],
        ["r1", "r3"],
        ["r2", "r3", "r4"],
        ["r1", "r2", "r3", "r4"],
    ]


def test_explicit_space_needs_unions():
    u = make_universe(["a", "b", "c"])
    opens = SetFamily(u, (0, 0b001, 0b010, 0b111))
    with pytest.raises(TopologyAxiomError, match=r"\['a'\] \| \['b'\]"):
        make_explicit_space(u, opens)


def test_explicit_space_needs_empty_set():
    u = make_universe(["a"])
    with pytest.raises(TopologyAxiomError, match="empty"):
        make_explicit_space(u, SetFamily(u, (1,)))


def test_one_point_space():
    u = make_universe(["a"])
    s = make_explicit_space(u, SetFamily(u, (0, 1)))
    assert s.mode == "explicit"
    assert s.provenance is None
    assert s.interior_table == (0, 1)
    assert s.closure_table == (0, 1)


def test_family_is_canonical():
    u = make_universe(["a", "b"])
    family = SetFamily(u, (3, 2, 0, 1, 2))
    assert family.masks == (0, 1, 2, 3)
    assert u.subset(["b"]) in family
    assert len(family) == 4


def test_space_operands_must_share_universe(space_22):
    other = make_universe(["x"])
    with pytest.raises(UniverseMismatchError):
        n_interior(space_22, other.full())
