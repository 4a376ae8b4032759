# ruff: noqa: D100, D103, ANN201

import pytest

from nano_continuity.cli.parser import (
    format_space,
    parse_map_file,
    parse_space_file,
    read_map_file,
    read_space_file,
)
from nano_continuity.core.exceptions import ParseError
from nano_continuity.verifier import SpaceMode, enumerate_spaces

WORKED_EXAMPLE = """\
# classes {r1} {r3} {r2, r4}
points: r1 r2 r3 r4
classes: [r1] [r3] [r2 r4]
subset: r1 r2
"""

DOMAIN = "points: r1 r2 r3 r4\nclasses: [r1] [r4] [r2 r3]\nsubset: r1 r4\n"
CODOMAIN = "points: s1 s2 s3 s4\nclasses: [s1] [s3] [s2 s4]\nsubset: s1 s2\n"
MAP = "domain: d.space\ncodomain: c.space\nmap: r1->s2 r2->s2 r3->s3 r4->s4\n"


def _spaces():
    return {"d.space": parse_space_file(DOMAIN), "c.space": parse_space_file(CODOMAIN)}


def test_parse_worked_example(space_22):
    space = parse_space_file(WORKED_EXAMPLE)
    assert space == space_22
    assert space.mode == "nano"


def test_parse_one_point_space():
    space = parse_space_file("points: a\nopens: [] [*]\n")
    assert space.mode == "explicit"
    assert space.opens.render() == [[], ["a"]]


def test_blocks_must_cover():
    with pytest.raises(ParseError, match="cover") as exc:
        parse_space_file("points: a b\nclasses: [a]\n")
    assert exc.value.line == 2


def test_unknown_label_has_line():
    with pytest.raises(ParseError, match="'c'") as exc:
        parse_space_file("points: a b\nclasses: [a] [c]\nsubset: a\n")
    assert exc.value.line == 2
    assert str(exc.value).startswith("line 2:")


@pytest.mark.parametrize("points", ["* a", "a:b c", "a->b c"])
def test_labels_clashing_with_syntax_rejected(points):
    with pytest.raises(ParseError, match="clashes with the file syntax") as exc:
        parse_space_file(f"points: {points}\nopens: [] [*]\n")
    assert exc.value.line == 1


def test_both_modes_rejected():
    with pytest.raises(ParseError, match="not both"):
        parse_space_file("points: a\nclasses: [a]\nsubset: a\nopens: [] [*]\n")


def test_neither_mode_rejected():
    with pytest.raises(ParseError, match="missing classes"):
        parse_space_file("points: a b\n")


def test_subset_needs_classes():
    with pytest.raises(ParseError, match="together"):
        read_space_file("points: a b\nsubset: a\n")


def test_malformed_block():
    with pytest.raises(ParseError, match="malformed") as exc:
        parse_space_file("points: a b\nopens: [] [a b\n")
    assert exc.value.line == 2


def test_unknown_key():
    with pytest.raises(ParseError, match="unknown key"):
        parse_space_file("points: a\ntopology: [] [*]\n")


def test_duplicate_section():
    with pytest.raises(ParseError, match="duplicate"):
        parse_space_file("points: a\npoints: b\nopens: [] [*]\n")


def test_explicit_topology_axioms_checked():
    with pytest.raises(ParseError, match="not a topology") as exc:
        parse_space_file("points: a b c\nopens: [] [a] [b] [*]\n")
    assert exc.value.line == 2


def test_empty_subset():
    space = parse_space_file("points: a b\nclasses: [a b]\nsubset: []\n")
    assert space.provenance.subset.bits == 0


def test_full_subset_shorthand():
    space = parse_space_file("points: a b\nclasses: [a] [b]\nsubset: *\n")
    assert space.provenance.subset.labels == ["a", "b"]


def test_parse_map():
    spaces = _spaces()
    h = parse_map_file(MAP, spaces)
    assert h.pairs() == [("r1", "s2"), ("r2", "s2"), ("r3", "s3"), ("r4", "s4")]


def test_map_must_be_total():
    spaces = _spaces()
    text = MAP.replace(" r4->s4", "")
    with pytest.raises(ParseError, match="not total") as exc:
        parse_map_file(text, spaces)
    assert exc.value.line == 3


def test_map_unknown_target():
    spaces = _spaces()
    text = MAP.replace("r3->s3", "r3->s9")
    with pytest.raises(ParseError, match="'s9'") as exc:
        parse_map_file(text, spaces)
    assert exc.value.line == 3


def test_map_unknown_space_reference():
    with pytest.raises(ParseError, match="unknown domain"):
        parse_map_file(MAP, {})


def test_map_file_sections():
    parsed = read_map_file("domain: a\ncodomain: b\nmap: x -> y  z->w\n")
    assert parsed.arrows == [("x", "y"), ("z", "w")]
    with pytest.raises(ParseError, match="codomain"):
        read_map_file("domain: a\nmap: x->y\n")
    with pytest.raises(ParseError, match="malformed arrow"):
        read_map_file("domain: a\ncodomain: b\nmap: x->y z\n")


def test_identity_map_file():
    spaces = {"d.space": parse_space_file(DOMAIN)}
    text = (
        "domain: d.space\ncodomain: d.space\n"
        "map: r1->r1 r2->r2 r3->r3 r4->r4\n"
    )
    h = parse_map_file(text, spaces)
    assert h.assignment == (0, 1, 2, 3)


@pytest.mark.parametrize("mode", [SpaceMode.NANO, SpaceMode.EXPLICIT])
def test_canonical_form_round_trips(mode):
    for space in enumerate_spaces(3, mode):
        assert parse_space_file(format_space(space)) == space


def test_format_worked_example(space_22):
    assert format_space(space_22) == (
        "points: r1 r2 r3 r4\nclasses: [r1] [r2 r4] [r3]\nsubset: [r1 r2]\n"
    )
