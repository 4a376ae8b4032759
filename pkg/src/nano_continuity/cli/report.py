"""Plain-text and JSON rendering of command results."""

from __future__ import annotations

from typing import Any

import orjson
from pydantic import BaseModel, Field

from nano_continuity.continuity import (
    ContinuityClass,
    ContinuityProfile,
    NSAlphaCharacterizations,
)
from nano_continuity.families import FamilyKind, enumerate_family
from nano_continuity.space import NanoSpace
from nano_continuity.verifier.instances import describe_space
from nano_continuity.verifier.models import (
    CheckReport,
    Discrepancy,
    ImplicationMatrix,
    ReproReport,
    ReproStatus,
    SpaceDescription,
    Witness,
)

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS


class JsonReport(BaseModel):
    """Top-level shape of every ``--json`` output."""

    command: str
    status: str = Field(..., description="ok or failed.")
    spaces: dict[str, SpaceDescription] = Field(default_factory=dict)
    families: dict[str, dict[str, list[list[str]]]] = Field(default_factory=dict)
    profile: ContinuityProfile | None = None
    witnesses: list[Witness] = Field(default_factory=list)
    discrepancies: list[Discrepancy] = Field(default_factory=list)
    details: dict[str, Any] = Field(default_factory=dict)


def dumps(report: BaseModel) -> str:
    """Byte-stable JSON with sorted keys."""
    return orjson.dumps(
        report.model_dump(mode="json", by_alias=True),
        option=JSON_OPTIONS,
    ).decode()


def space_families(space: NanoSpace) -> dict[str, list[list[str]]]:
    """Every family of ``space`` as label lists, keyed by kind."""
    return {kind.value: enumerate_family(space, kind).render() for kind in FamilyKind}


def _set(labels: list[str]) -> str:
    return "{" + ", ".join(labels) + "}"


def _family(members: list[list[str]]) -> str:
    return "{" + ", ".join(_set(m) for m in members) + "}"


def space_text(name: str, desc: SpaceDescription) -> list[str]:
    """Describe a space in a few lines."""
    lines = [f"{name}: {desc.mode} space on {_set(desc.points)}"]
    if desc.classes is not None and desc.subset is not None:
        lines.append(f"  classes: {_family(desc.classes)}")
        lines.append(f"  subset: {_set(desc.subset)}")
    lines.append(f"  opens: {_family(desc.opens)}")
    return lines


def families_text(space: NanoSpace) -> str:
    """The ``space families`` report."""
    lines = space_text("space", describe_space(space))
    for kind, members in space_families(space).items():
        lines.append(f"{kind} ({len(members)}): {_family(members)}")
    return "\n".join(lines)


def profile_text(
    profile: ContinuityProfile,
    characterizations: NSAlphaCharacterizations,
) -> str:
    """The ``map classify`` report."""
    lines = [
        f"{cls.value:<6} {'yes' if profile.holds(cls) else 'no'}"
        for cls in ContinuityClass
    ]
    lines.append(f"N-open map {'yes' if profile.n_open_map else 'no'}")
    agreement = "agree" if characterizations.agree else "DISAGREE"
    lines.append(f"NSa characterisations {agreement}: {list(characterizations.evaluations)}")
    return "\n".join(lines)


def witness_text(w: Witness) -> str:
    """Spaces, maps and claims of a witness."""
    lines = [f"witness [{w.label}] at instance {w.position}"]
    for name, desc in w.spaces.items():
        lines.extend("  " + line for line in space_text(name, desc))
    for name, m in w.maps.items():
        arrows = " ".join(f"{a}->{b}" for a, b in m.arrows.items())
        lines.append(f"  {name}: {m.domain} -> {m.codomain}: {arrows}")
    for claim in w.claims:
        verb = "is" if claim.holds else "is not"
        lines.append(f"  {claim.map} {verb} {claim.continuity_class.value}-continuous")
    return "\n".join(lines)


def discrepancy_text(d: Discrepancy) -> str:
    """One discrepancy, with its witness if any."""
    text = f"{d.status.value}: {d.check}: {d.detail}"
    if d.witness is not None:
        text += "\n" + witness_text(d.witness)
    return text


def matrix_text(matrix: ImplicationMatrix) -> str:
    """The implication grid, stated-claim annotations and derived arrows."""
    classes = list(ContinuityClass)
    width = 7
    header = " " * width + "".join(f"{c.value:>{width}}" for c in classes)
    lines = [f"{matrix.instances} instances, row implies column", header]
    for premise in classes:
        row = f"{premise.value:<{width}}"
        for conclusion in classes:
            cell = matrix.cell(premise, conclusion)
            mark = "=>" if cell.status.value == "PROVED-EMPIRICALLY" else "x"
            row += f"{mark:>{width}}"
        lines.append(row)
    for cell in matrix.cells:
        if cell.stated is not None:
            lines.append(
                f"stated {cell.stated}: {cell.premise.value} -> "
                f"{cell.conclusion.value}: {cell.status.value}",
            )
    for arrow in matrix.derived_not_claimed:
        lines.append(f"derived, not claimed: {arrow}")
    lines.extend(discrepancy_text(d) for d in matrix.discrepancies)
    return "\n".join(lines)


def check_text(report: CheckReport) -> str:
    """Summary of a verification sweep."""
    status = "PASSED" if report.passed else "FAILED"
    lines = [f"{report.name}: {status} over {report.instances} instances"]
    for key, value in sorted(report.observations.items()):
        lines.append(f"  {key}: {value}")
    lines.extend(
        f"  set witness [{s.label}]: {_set(s.subset)} in {_family(s.space.opens)}"
        for s in report.set_witnesses
    )
    lines.extend(witness_text(w) for w in report.witnesses)
    lines.extend(f"missing witness: {label}" for label in report.missing_witnesses)
    lines.extend(discrepancy_text(d) for d in report.discrepancies)
    return "\n".join(lines)


def repro_text(report: ReproReport) -> str:
    """One line per corpus assertion and a tally."""
    lines = []
    for e in report.entries:
        line = f"{e.status.value:<18} {e.case}: {e.check}"
        if e.status != ReproStatus.PASS:
            line += f" (expected {e.expected}, got {e.actual})"
        if e.detail:
            line += f"\n{'':<19}{e.detail}"
        lines.append(line)
    lines.append(
        f"{report.count(ReproStatus.PASS)} passed, "
        f"{report.count(ReproStatus.FAIL)} failed, "
        f"{report.count(ReproStatus.KNOWN)} known discrepancies",
    )
    return "\n".join(lines)
