"""Finite universes, partitions and nano topological spaces."""

from .family import SetFamily
from .nano_space import (
    NanoSpace,
    Provenance,
    build_nano_topology,
    make_explicit_space,
    n_closure,
    n_interior,
)
from .partition import Approximations, Partition, approximations, make_partition
from .universe import PointSet, Universe, make_universe

__all__ = [
    "Approximations",
    "NanoSpace",
    "Partition",
    "PointSet",
    "Provenance",
    "SetFamily",
    "Universe",
    "approximations",
    "build_nano_topology",
    "make_explicit_space",
    "make_partition",
    "make_universe",
    "n_closure",
    "n_interior",
]
