"""Finite maps and their continuity classes."""

from .classes import ContinuityClass
from .classify import (
    classify,
    is_family_continuous,
    is_n_open_map,
    n_continuity_by_interior,
    nsalpha_characterizations,
)
from .maps import (
    FiniteMap,
    compose,
    constant_map,
    identity_map,
    image,
    make_map,
    preimage,
)
from .models import ContinuityProfile, NSAlphaCharacterizations

__all__ = [
    "ContinuityClass",
    "ContinuityProfile",
    "FiniteMap",
    "NSAlphaCharacterizations",
    "classify",
    "compose",
    "constant_map",
    "identity_map",
    "image",
    "is_family_continuous",
    "is_n_open_map",
    "make_map",
    "n_continuity_by_interior",
    "nsalpha_characterizations",
    "preimage",
]
