"""Parsed forms of space and map description files."""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator


class SpaceFile(BaseModel):
    """A space file before its labels are resolved.

    Nano-derived spaces give ``classes`` and ``subset``; explicit spaces
    give ``opens``. ``None`` stands for the full universe inside a block
    list.
    """

    points: list[str] = Field(..., description="Point labels in order.")
    classes: list[list[str] | None] | None = Field(
        None,
        description="Partition blocks.",
    )
    subset: list[str] | None = Field(
        None,
        description="The approximated subset.",
    )
    opens: list[list[str] | None] | None = Field(
        None,
        description="Open sets of an explicit topology.",
    )

    @model_validator(mode="after")
    def check_mode(self) -> SpaceFile:
        """Require exactly one of the two space modes."""
        nano = self.classes is not None or self.subset is not None
        explicit = self.opens is not None
        if nano and explicit:
            msg = "give either classes and subset, or opens, not both"
            raise ValueError(msg)
        if not nano and not explicit:
            msg = "missing classes and subset, or opens"
            raise ValueError(msg)
        if nano and (self.classes is None or self.subset is None):
            msg = "classes and subset must be given together"
            raise ValueError(msg)
        return self


class MapFile(BaseModel):
    """A map file before its spaces are loaded."""

    domain: str = Field(..., description="Reference to the domain space.")
    codomain: str = Field(..., description="Reference to the codomain space.")
    arrows: list[tuple[str, str]] = Field(
        ...,
        description="Source and target labels, one pair per arrow.",
    )
