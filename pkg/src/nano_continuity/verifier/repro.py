"""Replay of the checked-in corpus of spaces, maps and expected results."""

from __future__ import annotations

import logging
from importlib.resources import files
from typing import Any

import yaml

from nano_continuity.cli.parser import Readable, load_map, load_space
from nano_continuity.continuity import (
    ContinuityClass,
    FiniteMap,
    classify,
    compose,
    is_n_open_map,
    n_continuity_by_interior,
    nsalpha_characterizations,
    preimage,
)
from nano_continuity.core.exceptions import NanoContinuityError
from nano_continuity.families import FamilyKind, enumerate_family
from nano_continuity.space import (
    NanoSpace,
    SetFamily,
    build_nano_topology,
    make_partition,
)

from .instances import describe_space
from .models import ReproEntry, ReproReport, ReproStatus

logger = logging.getLogger(__name__)

CORPUS_PACKAGE = "nano_continuity.corpus"
EXPECTED_FILE = "expected.yml"


def _labels(values: list[Any]) -> list[str]:
    return [str(v) for v in values]


def _family(space: NanoSpace, members: list[list[Any]]) -> SetFamily:
    u = space.universe
    return SetFamily(u, tuple(u.subset(_labels(m)).bits for m in members))


class _CaseReplay:
    """Assertions of one corpus case, collected as report entries."""

    def __init__(self, name: str, directory: Readable, report: ReproReport) -> None:
        self.name = name
        self.directory = directory
        self.report = report

    def add(
        self,
        check: str,
        expected: Any,
        actual: Any,
        status: ReproStatus | None = None,
        detail: str | None = None,
    ) -> None:
        if status is None:
            status = ReproStatus.PASS if expected == actual else ReproStatus.FAIL
        if status == ReproStatus.FAIL:
            logger.warning(
                f"{self.name}: {check} expected {expected}, got {actual}",
            )
        self.report.entries.append(
            ReproEntry(
                case=self.name,
                check=check,
                status=status,
                expected=expected,
                actual=actual,
                detail=detail,
            ),
        )

    def families(self, spaces: dict[str, NanoSpace], expected: dict[str, Any]) -> None:
        for space_name, kinds in expected.items():
            space = spaces[space_name]
            for kind_name, members in kinds.items():
                kind = FamilyKind(kind_name)
                actual = enumerate_family(space, kind)
                wanted = _family(space, members)
                self.add(
                    f"{space_name} {kind.value} family",
                    wanted.render(),
                    actual.render(),
                )

    def map_claims(
        self,
        name: str,
        h: FiniteMap,
        s_u: NanoSpace,
        s_v: NanoSpace,
        expected: dict[str, Any],
    ) -> None:
        profile = classify(h, s_u, s_v)
        for token, value in expected.get("classes", {}).items():
            cls = ContinuityClass.parse(token)
            self.add(f"{name} {cls.value}", bool(value), profile.holds(cls))
        if "n_open_map" in expected:
            self.add(
                f"{name} N-open map",
                bool(expected["n_open_map"]),
                is_n_open_map(h, s_u, s_v),
            )
        if "interior_inclusion" in expected:
            self.add(
                f"{name} interior inclusion",
                bool(expected["interior_inclusion"]),
                n_continuity_by_interior(h, s_u, s_v),
            )
        if "characterizations" in expected:
            values = nsalpha_characterizations(h, s_u, s_v).evaluations
            self.add(
                f"{name} NSa characterisations",
                [bool(expected["characterizations"])] * 4,
                list(values),
            )
        for item in expected.get("preimages", []):
            b = s_v.universe.subset(_labels(item["of"]))
            self.add(
                f"{name} preimage of {b}",
                _labels(item["is"]),
                preimage(h, b).labels,
            )

    def derivations(self, spaces: dict[str, NanoSpace], expected: dict[str, Any]) -> None:
        if not expected:
            return
        printed: dict[str, list[list[str]]] = {}
        derived: dict[str, list[list[str]]] = {}
        mismatched = []
        for space_name, stated in expected.items():
            space = spaces[space_name]
            u = space.universe
            generated = build_nano_topology(
                make_partition(u, [u.subset(_labels(c)) for c in stated["classes"]]),
                u.subset(_labels(stated["subset"])),
            )
            printed[space_name] = space.opens.render()
            derived[space_name] = generated.opens.render()
            if generated.opens != space.opens:
                mismatched.append(space_name)

        if not mismatched:
            self.add("stated derivation", printed, derived)
            return
        self.add(
            "stated derivation",
            printed,
            derived,
            status=ReproStatus.KNOWN,
            detail=(
                f"the stated classes and subset of {', '.join(mismatched)} do "
                "not generate the printed topology; the printed topology is used"
            ),
        )

    def run(self) -> None:
        expected = yaml.safe_load(
            self.directory.joinpath(EXPECTED_FILE).read_text(encoding="utf-8"),
        )
        spaces = {
            name: load_space(self.directory, file)
            for name, file in expected["spaces"].items()
        }
        for name, space in spaces.items():
            self.report.spaces[f"{self.name}/{name}"] = describe_space(space)

        self.families(spaces, expected.get("families", {}))

        maps: dict[str, tuple[FiniteMap, NanoSpace, NanoSpace]] = {}
        for name, claims in expected.get("maps", {}).items():
            maps[name] = load_map(self.directory, claims["file"])
            self.map_claims(name, *maps[name], claims)

        for claims in expected.get("compositions", []):
            h1, s_u, _ = maps[claims["first"]]
            h2, _, s_w = maps[claims["second"]]
            name = f"{claims['second']}.{claims['first']}"
            self.map_claims(name, compose(h2, h1), s_u, s_w, claims)

        self.derivations(spaces, expected.get("stated_derivations", {}))


def corpus_root() -> Readable:
    """The packaged corpus directory."""
    return files(CORPUS_PACKAGE)


def replay_corpus(root: Readable | None = None) -> ReproReport:
    """Rebuild every corpus case from its files and assert its expectations.

    Failures are report entries, never exceptions. A stated partition and
    subset that do not generate the printed topology is reported as a
    known discrepancy.
    """
    root_ = corpus_root() if root is None else root
    report = ReproReport()
    cases = sorted(
        (d for d in root_.iterdir() if d.is_dir() and d.joinpath(EXPECTED_FILE).is_file()),
        key=lambda d: d.name,
    )
    for directory in cases:
        replay = _CaseReplay(directory.name, directory, report)
        try:
            replay.run()
        except (NanoContinuityError, KeyError, ValueError, OSError) as exc:
            logger.exception(f"Corpus case {directory.name} failed to load")
            replay.add("load", "loaded", str(exc), status=ReproStatus.FAIL)

    logger.info(
        f"Replayed {len(cases)} corpus cases: "
        f"{report.count(ReproStatus.PASS)} passed, "
        f"{report.count(ReproStatus.FAIL)} failed, "
        f"{report.count(ReproStatus.KNOWN)} known discrepancies",
    )
    return report
