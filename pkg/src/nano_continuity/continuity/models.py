"""Classification results."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from .classes import ContinuityClass


class ContinuityProfile(BaseModel):
    """Membership of a map in each continuity class."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    n: bool = Field(..., alias="N", description="N-continuous.")
    na: bool = Field(..., alias="Na", description="Na-continuous.")
    na_star: bool = Field(..., alias="Na*", description="Na*-continuous.")
    na_2star: bool = Field(..., alias="Na**", description="Na**-continuous.")
    nsa: bool = Field(..., alias="NSa", description="NSa-continuous.")
    nsa_star: bool = Field(..., alias="NSa*", description="NSa*-continuous.")
    nsa_2star: bool = Field(
        ...,
        alias="NSa**",
        description="NSa**-continuous.",
    )
    n_open_map: bool = Field(
        ...,
        alias="N-open map",
        description="Images of open sets are open.",
    )

    def holds(self, cls: ContinuityClass) -> bool:
        """Whether the map is in class ``cls``."""
        return bool(getattr(self, cls.field_name))

    @property
    def mask(self) -> int:
        """The class memberships as a bitmask."""
        return sum(c.bit for c in ContinuityClass if self.holds(c))

    @classmethod
    def from_mask(cls, mask: int, *, n_open_map: bool) -> ContinuityProfile:
        """Build a profile from a class bitmask."""
        return cls(
            n_open_map=n_open_map,
            **{c.field_name: bool(mask & c.bit) for c in ContinuityClass},
        )


class NSAlphaCharacterizations(BaseModel):
    """Four evaluations of NSa-continuity.

    ``definitional``: preimages of open sets are NSa-open.
    ``closed_preimages``: preimages of closed sets are NSa-closed.
    ``image_inclusion``: ``h(int cl int cl C) <= cl h(C)`` for every ``C``.
    ``preimage_inclusion``: ``int cl int cl h^-1(D) <= h^-1(cl D)`` for
    every ``D``.
    """

    model_config = ConfigDict(frozen=True)

    definitional: bool
    closed_preimages: bool
    image_inclusion: bool
    preimage_inclusion: bool
    image_counterexample: list[str] | None = Field(
        None,
        description="First domain subset breaking the image inclusion.",
    )
    preimage_counterexample: list[str] | None = Field(
        None,
        description="First codomain subset breaking the preimage inclusion.",
    )

    @property
    def evaluations(self) -> tuple[bool, bool, bool, bool]:
        """The four evaluations in order."""
        return (
            self.definitional,
            self.closed_preimages,
            self.image_inclusion,
            self.preimage_inclusion,
        )

    @property
    def agree(self) -> bool:
        """True if all four evaluations coincide."""
        return len(set(self.evaluations)) == 1
