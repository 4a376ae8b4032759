# ruff: noqa: D100, D103, ANN201

import pytest

from nano_continuity.continuity import (
    compose,
    constant_map,
    identity_map,
    image,
    make_map,
    preimage,
)
from nano_continuity.core.exceptions import MapError, UniverseMismatchError
from nano_continuity.space import make_universe

U = make_universe(["a", "b", "c"])
V = make_universe(["x", "y"])


def test_make_map_from_pairs():
    h = make_map(U, V, [("a", "x"), ("b", "x"), ("c", "y")])
    assert h.assignment == (0, 0, 1)
    assert h.pairs() == [("a", "x"), ("b", "x"), ("c", "y")]
    assert h.surjective
    assert not h.injective


def test_preimage_and_image():
    h = make_map(U, V, {"a": "x", "b": "x", "c": "y"})
    assert preimage(h, V.subset(["x"])).labels == ["a", "b"]
    assert preimage(h, V.empty()) == U.empty()
    assert image(h, U.subset(["b", "c"])).labels == ["x", "y"]
    assert image(h, U.empty()) == V.empty()


def test_map_must_be_total():
    with pytest.raises(MapError, match="not total"):
        make_map(U, V, {"a": "x", "b": "y"})


def test_unknown_target_label():
    with pytest.raises(MapError, match="'z'"):
        make_map(U, V, {"a": "x", "b": "y", "c": "z"})


def test_unknown_source_label():
    with pytest.raises(MapError, match="domain label 'd'"):
        make_map(U, V, {"a": "x", "b": "y", "c": "y", "d": "x"})


def test_source_mapped_twice():
    with pytest.raises(MapError, match="more than once"):
        make_map(U, V, [("a", "x"), ("a", "y"), ("b", "x"), ("c", "x")])


def test_identity_is_bijective():
    h = identity_map(U)
    assert h.bijective
    assert preimage(h, U.subset(["b"])).labels == ["b"]


def test_constant_map():
    h = constant_map(U, V, "y")
    assert h.assignment == (1, 1, 1)
    with pytest.raises(MapError):
        constant_map(U, V, "z")


def test_compose_applies_first_map_first():
    w = make_universe(["p", "q"])
    h1 = make_map(U, V, {"a": "x", "b": "y", "c": "y"})
    h2 = make_map(V, w, {"x": "q", "y": "p"})
    composite = compose(h2, h1)
    assert composite.domain == U
    assert composite.codomain == w
    assert composite.pairs() == [("a", "q"), ("b", "p"), ("c", "p")]


def test_compose_needs_matching_middle():
    h = identity_map(U)
    with pytest.raises(UniverseMismatchError):
        compose(h, identity_map(V))


def test_preimage_checks_universe():
    h = identity_map(U)
    with pytest.raises(UniverseMismatchError):
        preimage(h, V.full())
