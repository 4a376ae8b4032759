"""Verifier bounds and report models."""

from __future__ import annotations

from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from nano_continuity.continuity import ContinuityClass
from nano_continuity.core.config import config
from nano_continuity.core.exceptions import BoundsError
from nano_continuity.families import FamilyKind

MAX_EXHAUSTIVE_SIZE = 4


class SpaceMode(str, Enum):
    """Which spaces instance enumeration draws from."""

    NANO = "nano"
    EXPLICIT = "explicit"
    BOTH = "both"


class InstanceBounds(BaseModel):
    """Limits and sampling parameters for an instance scan."""

    model_config = ConfigDict(frozen=True)

    max_size: int = Field(..., ge=1, description="Largest universe per side.")
    exhaustive_size: int = Field(
        MAX_EXHAUSTIVE_SIZE,
        ge=1,
        le=MAX_EXHAUSTIVE_SIZE,
        description="Largest size pair scanned exhaustively.",
    )
    composition_exhaustive_size: int = Field(
        3,
        ge=1,
        le=MAX_EXHAUSTIVE_SIZE,
        description="Largest size triple scanned exhaustively.",
    )
    mode: SpaceMode = Field(SpaceMode.NANO, description="Space source.")
    seed: int = Field(0, description="Seed for every sampled scan.")
    sample_count: int = Field(
        100_000,
        ge=0,
        description="Sampled instances beyond exhaustive reach.",
    )
    explicit_sample_count: int = Field(
        64,
        ge=1,
        description="Explicit topologies kept per size from 4 up.",
    )
    workers: int = Field(1, ge=1, description="Scan threads.")

    @model_validator(mode="after")
    def check_cap(self) -> InstanceBounds:
        """Keep every size under the universe cap."""
        if self.max_size > config.universe_cap:
            msg = (
                f"max_size {self.max_size} exceeds the universe cap "
                f"{config.universe_cap}"
            )
            raise BoundsError(msg)
        return self

    @classmethod
    def from_config(cls, **overrides: Any) -> InstanceBounds:
        """Configured defaults, with non-None overrides applied."""
        values = config.verify.model_dump()
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls.model_validate(values)


class SpaceDescription(BaseModel):
    """A space as it appears in reports and witnesses."""

    points: list[str]
    mode: str = Field(..., description="nano or explicit.")
    classes: list[list[str]] | None = Field(
        None,
        description="Partition blocks of a nano-derived space.",
    )
    subset: list[str] | None = Field(
        None,
        description="The approximated subset of a nano-derived space.",
    )
    opens: list[list[str]] = Field(..., description="Open sets, canonical.")


class MapDescription(BaseModel):
    """A map between two named spaces of a witness."""

    domain: str
    codomain: str
    arrows: dict[str, str]


class WitnessClaim(BaseModel):
    """A class membership a witness map is claimed to have or lack."""

    model_config = ConfigDict(populate_by_name=True)

    map: str
    continuity_class: ContinuityClass = Field(..., alias="class")
    holds: bool


class Witness(BaseModel):
    """A concrete instance separating two properties."""

    label: str = Field(..., description="Property pair or clause id.")
    position: int = Field(..., description="Index in enumeration order.")
    spaces: dict[str, SpaceDescription]
    maps: dict[str, MapDescription]
    claims: list[WitnessClaim]


class SetWitness(BaseModel):
    """A subset in one family of a space but not in another."""

    label: str
    space: SpaceDescription
    subset: list[str]
    member_of: FamilyKind
    not_member_of: FamilyKind


class CellStatus(str, Enum):
    """Outcome of scanning one implication."""

    PROVED = "PROVED-EMPIRICALLY"
    REFUTED = "REFUTED"


class MatrixCell(BaseModel):
    """Whether class ``premise`` implied class ``conclusion`` in bounds."""

    model_config = ConfigDict(populate_by_name=True)

    premise: ContinuityClass = Field(..., alias="if")
    conclusion: ContinuityClass = Field(..., alias="then")
    status: CellStatus
    stated: str | None = Field(
        None,
        description="implies or independent when the text states the pair.",
    )
    witness: Witness | None = None


class DiscrepancyStatus(str, Enum):
    """Severity of a discrepancy record."""

    FAILURE = "FAILURE"
    KNOWN = "KNOWN-DISCREPANCY"


class Discrepancy(BaseModel):
    """A claim that did not hold on a concrete instance."""

    check: str
    detail: str
    status: DiscrepancyStatus = DiscrepancyStatus.FAILURE
    witness: Witness | None = None
    data: dict[str, Any] | None = None


class ImplicationMatrix(BaseModel):
    """The seven-by-seven implication grid among continuity classes."""

    bounds: InstanceBounds
    instances: int
    cells: list[MatrixCell]
    derived_not_claimed: list[str] = Field(
        default_factory=list,
        description="Implications found but not stated.",
    )
    discrepancies: list[Discrepancy] = Field(default_factory=list)

    def cell(self, premise: ContinuityClass, conclusion: ContinuityClass) -> MatrixCell:
        """Look up one cell."""
        for c in self.cells:
            if c.premise == premise and c.conclusion == conclusion:
                return c
        msg = f"No cell {premise.value} -> {conclusion.value}"
        raise KeyError(msg)

    @property
    def passed(self) -> bool:
        """True if every stated relationship was confirmed."""
        return not any(
            d.status == DiscrepancyStatus.FAILURE for d in self.discrepancies
        )


class CheckReport(BaseModel):
    """Outcome of one verification sweep."""

    name: str
    bounds: InstanceBounds
    instances: int = 0
    discrepancies: list[Discrepancy] = Field(default_factory=list)
    witnesses: list[Witness] = Field(default_factory=list)
    set_witnesses: list[SetWitness] = Field(default_factory=list)
    missing_witnesses: list[str] = Field(
        default_factory=list,
        description="Requested witnesses not found within bounds.",
    )
    observations: dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """No failures and every requested witness found."""
        return not self.missing_witnesses and not any(
            d.status == DiscrepancyStatus.FAILURE for d in self.discrepancies
        )


class ReproStatus(str, Enum):
    """Outcome of one corpus assertion."""

    PASS = "PASS"
    FAIL = "FAIL"
    KNOWN = "KNOWN-DISCREPANCY"


class ReproEntry(BaseModel):
    """One assertion replayed from the corpus."""

    case: str
    check: str
    status: ReproStatus
    expected: Any = None
    actual: Any = None
    detail: str | None = None


class ReproReport(BaseModel):
    """Outcome of replaying every corpus case."""

    entries: list[ReproEntry] = Field(default_factory=list)
    spaces: dict[str, SpaceDescription] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """True if no entry failed."""
        return all(e.status != ReproStatus.FAIL for e in self.entries)

    def count(self, status: ReproStatus) -> int:
        """Number of entries with ``status``."""
        return sum(1 for e in self.entries if e.status == status)
