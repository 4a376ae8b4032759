"""Nano open, alpha-open and semi-alpha-open families."""

from .kinds import FamilyKind
from .open_sets import (
    FamilyTable,
    NSAlphaCheck,
    complement_family,
    enumerate_family,
    family_table,
    is_n_open,
    is_nalpha_open,
    is_nsalpha_open,
    nsalpha_open_check,
)

__all__ = [
    "FamilyKind",
    "FamilyTable",
    "NSAlphaCheck",
    "complement_family",
    "enumerate_family",
    "family_table",
    "is_n_open",
    "is_nalpha_open",
    "is_nsalpha_open",
    "nsalpha_open_check",
]
