"""Utility functions."""

from .bits import (
    canonical_key,
    is_subset,
    iter_bits,
    mask_of,
    popcount,
)

__all__ = [
    "canonical_key",
    "is_subset",
    "iter_bits",
    "mask_of",
    "popcount",
]
