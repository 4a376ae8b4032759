# ruff: noqa: D100, D103, ANN201

import pytest

from nano_continuity.core.exceptions import BoundsError
from nano_continuity.verifier import (
    InstanceBounds,
    SpaceMode,
    enumerate_maps,
    enumerate_spaces,
    restricted_growth_strings,
)
from nano_continuity.verifier.enumerate import (
    distinct_spaces,
    enumerate_partitions,
    enumerate_topologies,
    points,
)
from nano_continuity.verifier.instances import (
    iter_instances,
    pair_blocks,
    scan_blocks,
    size_pairs,
)


@pytest.mark.parametrize(("n", "bell"), [(1, 1), (2, 2), (3, 5), (4, 15)])
def test_restricted_growth_strings_count_partitions(n, bell):
    strings = list(restricted_growth_strings(n))
    assert len(strings) == bell
    assert len(set(strings)) == bell
    assert strings[0] == (0,) * n
    assert strings[-1] == tuple(range(n))


def test_partitions_cover_the_universe():
    u = points(3)
    for p in enumerate_partitions(u):
        total = 0
        for block in p.block_masks:
            assert block & total == 0
            total |= block
        assert total == u.full_mask


@pytest.mark.parametrize(("n", "count"), [(1, 2), (2, 8), (3, 40), (4, 240)])
def test_nano_space_stream_has_one_space_per_partition_and_subset(n, count):
    assert sum(1 for _ in enumerate_spaces(n, SpaceMode.NANO)) == count


@pytest.mark.parametrize(("n", "count"), [(1, 1), (2, 4), (3, 29), (4, 355)])
def test_topology_counts(n, count):
    assert sum(1 for _ in enumerate_topologies(points(n))) == count


def test_explicit_stream_samples_at_four_points():
    spaces = list(enumerate_spaces(4, "explicit", seed=1, sample_count=10))
    assert len(spaces) == 10
    assert all(s.mode == "explicit" for s in spaces)
    again = list(enumerate_spaces(4, "explicit", seed=1, sample_count=10))
    assert [s.opens for s in spaces] == [s.opens for s in again]


def test_explicit_stream_is_random_past_four_points():
    spaces = list(enumerate_spaces(5, "explicit", seed=3, sample_count=5))
    assert 0 < len(spaces) <= 5
    assert len({s.opens.masks for s in spaces}) == len(spaces)


def test_distinct_spaces_keep_first_occurrence():
    spaces = distinct_spaces(2, SpaceMode.NANO, 0, 64)
    assert [s.opens.render() for s in spaces] == [
        [[], ["x1", "x2"]],
        [[], ["x1"], ["x1", "x2"]],
        [[], ["x2"], ["x1", "x2"]],
    ]


def test_both_mode_concatenates_streams():
    total = sum(1 for _ in enumerate_spaces(2, SpaceMode.BOTH))
    assert total == 8 + 4


def test_enumerate_spaces_rejects_bad_size():
    with pytest.raises(BoundsError):
        list(enumerate_spaces(0, SpaceMode.NANO))


@pytest.mark.parametrize(
    ("m", "n", "bijective_only", "count"),
    [(2, 2, False, 4), (4, 4, True, 24), (4, 3, False, 81)],
)
def test_map_counts(m, n, bijective_only, count):
    maps = list(enumerate_maps(points(m), points(n), bijective_only=bijective_only))
    assert len(maps) == count
    assert len({h.assignment for h in maps}) == count


def test_maps_are_in_counter_order():
    maps = list(enumerate_maps(points(2), points(2)))
    assert [h.assignment for h in maps] == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_bijections_need_equal_sizes():
    with pytest.raises(BoundsError):
        list(enumerate_maps(points(2), points(3), bijective_only=True))


def test_size_pairs_order():
    assert size_pairs(2) == [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert size_pairs(3, equal_only=True) == [(1, 1), (2, 2), (3, 3)]


def test_instances_within_small_bounds():
    bounds = InstanceBounds(max_size=2, sample_count=0)
    instances = list(iter_instances(bounds))
    # One space on one point, three distinct spaces on two.
    assert len(instances) == 1 + 3 * 2 + 3 * 1 + 9 * 4
    assert [i.position for i in instances] == list(range(len(instances)))
    assert sum(len(b) for b in pair_blocks(bounds)) == len(instances)


def test_sampled_instances_are_seeded():
    bounds = InstanceBounds(max_size=5, exhaustive_size=1, sample_count=50, seed=7)
    first = [(i.domain, i.codomain, i.mapping) for i in iter_instances(bounds)]
    second = [(i.domain, i.codomain, i.mapping) for i in iter_instances(bounds)]
    assert first == second
    # 24 sampled size pairs share 50 draws, rounded up per pair.
    assert len(first) == 1 + 24 * 3


def test_scan_blocks_keeps_block_order():
    bounds = InstanceBounds(max_size=2, sample_count=0)
    blocks = pair_blocks(bounds)
    sequential = scan_blocks(blocks, len, workers=1)
    threaded = scan_blocks(blocks, len, workers=3)
    assert sequential == threaded


def test_bounds_over_cap():
    with pytest.raises(BoundsError):
        InstanceBounds(max_size=17)
