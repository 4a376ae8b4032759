# ruff: noqa: D100, D103, ANN201

import pytest

from nano_continuity.continuity import FiniteMap, make_map
from nano_continuity.space import (
    NanoSpace,
    build_nano_topology,
    make_partition,
    make_universe,
)
from nano_continuity.verifier import InstanceBounds


def nano(labels: str, classes: list[str], subset: str) -> NanoSpace:
    u = make_universe(labels.split())
    partition = make_partition(u, [u.subset(block.split()) for block in classes])
    return build_nano_topology(partition, u.subset(subset.split()))


@pytest.fixture
def space_22() -> NanoSpace:
    """Four points, classes {r1} {r3} {r2, r4}, approximating {r1, r2}."""
    return nano("r1 r2 r3 r4", ["r1", "r3", "r2 r4"], "r1 r2")


@pytest.fixture
def alpha_domain() -> NanoSpace:
    return nano("r1 r2 r3 r4", ["r1", "r4", "r2 r3"], "r1 r4")


@pytest.fixture
def alpha_codomain() -> NanoSpace:
    return nano("s1 s2 s3 s4", ["s1", "s3", "s2 s4"], "s1 s2")


@pytest.fixture
def alpha_map(alpha_domain: NanoSpace, alpha_codomain: NanoSpace) -> FiniteMap:
    """Na-continuous but not N-continuous."""
    return make_map(
        alpha_domain.universe,
        alpha_codomain.universe,
        {"r1": "s2", "r2": "s2", "r3": "s3", "r4": "s4"},
    )


@pytest.fixture
def make_nano():
    return nano


@pytest.fixture
def small_bounds() -> InstanceBounds:
    return InstanceBounds(max_size=3, sample_count=0)
