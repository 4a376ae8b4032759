"""Instance enumeration, implication matrix, theorem sweeps and corpus
replay.
"""

from .compositions import CLAUSES, check_compositions
from .enumerate import enumerate_maps, enumerate_spaces, restricted_growth_strings
from .matrix import implication_matrix
from .models import (
    CheckReport,
    ImplicationMatrix,
    InstanceBounds,
    ReproReport,
    SpaceMode,
    Witness,
)
from .repro import replay_corpus
from .theorems import (
    check_conditional_theorems,
    check_equivalences,
    check_set_hierarchy,
)
from .witness import find_witness, replay_witness

__all__ = [
    "CLAUSES",
    "CheckReport",
    "ImplicationMatrix",
    "InstanceBounds",
    "ReproReport",
    "SpaceMode",
    "Witness",
    "check_compositions",
    "check_conditional_theorems",
    "check_equivalences",
    "check_set_hierarchy",
    "enumerate_maps",
    "enumerate_spaces",
    "find_witness",
    "implication_matrix",
    "replay_corpus",
    "replay_witness",
    "restricted_growth_strings",
]
