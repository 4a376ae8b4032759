"""Line-oriented space and map file formats.

Space files::

    # comment
    points: r1 r2 r3 r4
    classes: [r1] [r3] [r2 r4]
    subset: r1 r2

or, for an explicit topology, ``opens: [] [r1] [*]`` in place of
``classes`` and ``subset``. ``[]`` is the empty set and ``[*]`` the whole
universe.

Map files::

    domain: domain.space
    codomain: codomain.space
    map: r1->s2 r2->s2 r3->s3 r4->s4
"""

from __future__ import annotations

import logging
import re
from collections.abc import Iterator, Mapping
from pathlib import Path
from typing import Protocol

from pydantic import ValidationError

from nano_continuity.continuity import FiniteMap, make_map
from nano_continuity.core.exceptions import NanoContinuityError, ParseError
from nano_continuity.space import (
    NanoSpace,
    SetFamily,
    Universe,
    build_nano_topology,
    make_explicit_space,
    make_partition,
    make_universe,
)
from nano_continuity.space.universe import WHOLE_UNIVERSE_LABEL

from .models import MapFile, SpaceFile

logger = logging.getLogger(__name__)

SPACE_KEYS = ("points", "classes", "subset", "opens")
MAP_KEYS = ("domain", "codomain", "map")
FULL = WHOLE_UNIVERSE_LABEL

_BLOCK = re.compile(r"\[([^\[\]]*)\]")
_ARROW = re.compile(r"(\S+?)\s*->\s*(\S+)")


class Readable(Protocol):
    """A directory or file that can be walked and read, such as ``Path`` or
    an ``importlib.resources`` traversable.
    """

    @property
    def name(self) -> str: ...  # noqa: D102

    def iterdir(self) -> Iterator[Readable]: ...  # noqa: D102

    def is_dir(self) -> bool: ...  # noqa: D102

    def is_file(self) -> bool: ...  # noqa: D102

    def joinpath(self, *descendants: str) -> Readable: ...  # noqa: D102

    def read_text(self, encoding: str | None = None) -> str: ...  # noqa: D102


def _lines(text: str, keys: tuple[str, ...]) -> list[tuple[int, str, str]]:
    entries = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep:
            msg = f"expected 'key: value', got {line!r}"
            raise ParseError(msg, number)
        if key not in keys:
            msg = f"unknown key {key!r}, expected one of {list(keys)}"
            raise ParseError(msg, number)
        entries.append((number, key, value.strip()))
    return entries


def parse_blocks(value: str, line: int) -> list[list[str] | None]:
    """Parse ``[a b] [] [*]``; ``[*]`` becomes ``None``.

    Raises:
        ParseError: On text outside brackets or unbalanced brackets.

    """
    blocks: list[list[str] | None] = []
    position = 0
    for match in _BLOCK.finditer(value):
        between = value[position : match.start()]
        if between.strip():
            msg = f"unexpected {between.strip()!r} outside brackets"
            raise ParseError(msg, line)
        labels = match.group(1).replace(",", " ").split()
        blocks.append(None if labels == [FULL] else labels)
        position = match.end()
    rest = value[position:]
    if rest.strip():
        msg = f"malformed block syntax near {rest.strip()!r}"
        raise ParseError(msg, line)
    return blocks


def _parse_subset(value: str, line: int) -> list[str] | None:
    if "[" in value or "]" in value:
        blocks = parse_blocks(value, line)
        if len(blocks) != 1:
            msg = f"subset must be a single block, got {len(blocks)}"
            raise ParseError(msg, line)
        return blocks[0]
    labels = value.replace(",", " ").split()
    return None if labels == [FULL] else labels


def _read_sections(text: str) -> tuple[dict[str, object], dict[str, int]]:
    values: dict[str, object] = {}
    lines: dict[str, int] = {}
    for number, key, value in _lines(text, SPACE_KEYS):
        if key in values:
            msg = f"duplicate {key!r} section, first on line {lines[key]}"
            raise ParseError(msg, number)
        lines[key] = number
        if key == "points":
            values[key] = value.replace(",", " ").split()
        elif key == "subset":
            values[key] = _parse_subset(value, number)
        else:
            values[key] = parse_blocks(value, number)

    if "points" not in values:
        msg = "missing 'points' section"
        raise ParseError(msg, 1)
    if "subset" in lines and values["subset"] is None:
        values["subset"] = list(values["points"])  # type: ignore[call-overload]
    return values, lines


def _validate(values: dict[str, object], lines: dict[str, int]) -> SpaceFile:
    try:
        return SpaceFile.model_validate(values)
    except ValidationError as exc:
        line = max(lines.values())
        msg = "; ".join(
            str(e["msg"]).removeprefix("Value error, ") for e in exc.errors()
        )
        raise ParseError(msg, line) from exc


def read_space_file(text: str) -> SpaceFile:
    """Parse the sections of a space file without resolving labels.

    Raises:
        ParseError: On malformed lines, duplicate sections or a wrong
            combination of sections.

    """
    return _validate(*_read_sections(text))


def _resolve(u: Universe, labels: list[str] | None, line: int) -> int:
    if labels is None:
        return u.full_mask
    try:
        return u.subset(labels).bits
    except NanoContinuityError as exc:
        raise ParseError(str(exc), line) from exc


def parse_space_file(text: str) -> NanoSpace:
    """Parse and validate a space file.

    Raises:
        ParseError: On any syntax error, unknown label, invalid partition
            or topology axiom failure, with the offending line.

    """
    values, lines = _read_sections(text)
    try:
        u = make_universe(values["points"])  # type: ignore[arg-type]
    except NanoContinuityError as exc:
        raise ParseError(str(exc), lines["points"]) from exc

    partition = None
    if "classes" in values:
        line = lines["classes"]
        blocks = [
            u.point_set(_resolve(u, block, line))
            for block in values["classes"]  # type: ignore[attr-defined]
        ]
        try:
            partition = make_partition(u, blocks)
        except NanoContinuityError as exc:
            raise ParseError(str(exc), line) from exc

    parsed = _validate(values, lines)

    if parsed.opens is not None:
        line = lines["opens"]
        masks = tuple(_resolve(u, member, line) for member in parsed.opens)
        try:
            return make_explicit_space(u, SetFamily(u, masks))
        except NanoContinuityError as exc:
            raise ParseError(str(exc), line) from exc

    if partition is None:
        msg = "missing classes"
        raise ParseError(msg, max(lines.values()))
    subset = u.point_set(_resolve(u, parsed.subset, lines["subset"]))
    return build_nano_topology(partition, subset)


def _render_block(u: Universe, mask: int) -> str:
    if mask == u.full_mask:
        return f"[{FULL}]"
    return "[" + " ".join(u.render(mask)) + "]"


def format_space(space: NanoSpace) -> str:
    """Canonical text form of a space; ``parse_space_file`` inverts it."""
    u = space.universe
    out = [f"points: {' '.join(u.labels)}"]
    prov = space.provenance
    if prov is None:
        out.append(
            "opens: " + " ".join(_render_block(u, m) for m in space.opens.masks),
        )
    else:
        out.append(
            "classes: "
            + " ".join(_render_block(u, b) for b in prov.partition.block_masks),
        )
        out.append(f"subset: {_render_block(u, prov.subset.bits)}")
    return "\n".join(out) + "\n"


def read_map_file(text: str) -> MapFile:
    """Parse the sections of a map file without loading its spaces.

    Raises:
        ParseError: On malformed lines or arrows, or missing sections.

    """
    refs: dict[str, str] = {}
    arrows: list[tuple[str, str]] = []
    last = 1
    for number, key, value in _lines(text, MAP_KEYS):
        last = number
        if key in refs:
            msg = f"duplicate {key!r} section"
            raise ParseError(msg, number)
        if key != "map":
            refs[key] = value
            continue
        position = 0
        for match in _ARROW.finditer(value):
            if value[position : match.start()].strip():
                msg = f"malformed arrow near {value[position:match.start()].strip()!r}"
                raise ParseError(msg, number)
            arrows.append((match.group(1), match.group(2)))
            position = match.end()
        if value[position:].strip():
            msg = f"malformed arrow near {value[position:].strip()!r}"
            raise ParseError(msg, number)

    for key in ("domain", "codomain"):
        if key not in refs:
            msg = f"missing {key!r} section"
            raise ParseError(msg, last)
    return MapFile(domain=refs["domain"], codomain=refs["codomain"], arrows=arrows)


def _arrow_line(text: str, source: str) -> int | None:
    pattern = re.compile(rf"(^|\s){re.escape(source)}\s*->")
    for number, raw in enumerate(text.splitlines(), start=1):
        if raw.lstrip().startswith("map") and pattern.search(raw.split("#", 1)[0]):
            return number
    return None


def _map_line(text: str) -> int | None:
    for number, raw in enumerate(text.splitlines(), start=1):
        if raw.lstrip().startswith("map"):
            return number
    return None


def parse_map_file(text: str, spaces: Mapping[str, NanoSpace]) -> FiniteMap:
    """Parse a map file against already parsed spaces.

    Args:
        text (str): The map file contents.
        spaces (Mapping[str, NanoSpace]): Spaces keyed by the references the
            ``domain`` and ``codomain`` sections use.

    Returns:
        FiniteMap: The validated map.

    Raises:
        ParseError: On unknown references, unknown labels or a map that is
            not total.

    """
    parsed = read_map_file(text)
    resolved = {}
    for key in ("domain", "codomain"):
        ref = getattr(parsed, key)
        if ref not in spaces:
            msg = f"unknown {key} space {ref!r}"
            raise ParseError(msg, _map_line(text))
        resolved[key] = spaces[ref]
    try:
        return make_map(
            resolved["domain"].universe,
            resolved["codomain"].universe,
            parsed.arrows,
        )
    except NanoContinuityError as exc:
        match = re.search(r"'([^']+)'", str(exc))
        line = _arrow_line(text, match.group(1)) if match else None
        raise ParseError(str(exc), line or _map_line(text)) from exc


def load_space(directory: Readable | Path, name: str) -> NanoSpace:
    """Read and parse a space file relative to ``directory``."""
    text = directory.joinpath(name).read_text(encoding="utf-8")
    try:
        return parse_space_file(text)
    except ParseError as exc:
        msg = f"{name}: {exc}"
        raise ParseError(msg) from exc


def load_map(
    directory: Readable | Path,
    name: str,
) -> tuple[FiniteMap, NanoSpace, NanoSpace]:
    """Read a map file and the space files it references.

    Returns:
        tuple[FiniteMap, NanoSpace, NanoSpace]: The map, its domain space
            and its codomain space.

    """
    text = directory.joinpath(name).read_text(encoding="utf-8")
    try:
        parsed = read_map_file(text)
    except ParseError as exc:
        msg = f"{name}: {exc}"
        raise ParseError(msg) from exc
    spaces = {
        ref: load_space(directory, ref) for ref in {parsed.domain, parsed.codomain}
    }
    try:
        h = parse_map_file(text, spaces)
    except ParseError as exc:
        msg = f"{name}: {exc}"
        raise ParseError(msg) from exc
    logger.debug(f"Loaded map {name} from {parsed.domain} to {parsed.codomain}")
    return h, spaces[parsed.domain], spaces[parsed.codomain]
