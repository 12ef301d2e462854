"""Smoke tests for the python bindings."""

import math

import pytest

import tiling


def test_builtin_names_and_tilesets():
    names = tiling.builtin_names()
    assert "p2" in names and "fractal-rect" in names
    ts = tiling.builtin_tileset("p2")
    assert "kite" in ts.tile_ids and "dart" in ts.tile_ids
    with pytest.raises(tiling.TilingError):
        tiling.builtin_tileset("p9")


def test_tessellation_validates_clean():
    ts = tiling.builtin_tileset("square-vitruvian")
    patch = tiling.tessellate(ts, "square", rows=3, cols=3)
    assert len(patch) == 9
    report = tiling.validate(ts, patch)
    assert report["valid"]
    assert report["tile_counts"]["square"] == 9


def test_two_adjacent_choices():
    ts = tiling.builtin_tileset("square-two-adjacent")
    a = tiling.tessellate(ts, "square", rows=3, cols=4, mode="two-adjacent",
                          choices=[False, False])
    b = tiling.tessellate(ts, "square", rows=3, cols=4, mode="two-adjacent",
                          choices=[True, False])
    assert a.to_text() != b.to_text()
    assert tiling.count_row_arrangements(ts, "square", 4, 4) == 8


def test_penrose_counts_and_ratio():
    ts = tiling.builtin_tileset("p2")
    patch = tiling.penrose(ts, "single-kite", 3)
    counts = tiling.half_unit_counts(patch)
    assert counts == {"kite": 26, "dart": 16}
    assert math.isclose(tiling.tile_ratio(ts, patch), 13 / 8)
    assert tiling.validate(ts, patch)["valid"]


def test_vertex_stars_subset_of_legal():
    ts = tiling.builtin_tileset("p2")
    patch = tiling.penrose(ts, "sun", 4)
    legal = set(tiling.legal_vertex_star_keys(ts))
    observed = set(tiling.vertex_star_keys(ts, patch))
    assert len(observed) == 7
    assert observed <= legal


def test_fractal_growth_and_collisions():
    ts = tiling.builtin_tileset("fractal-rect")
    patch = tiling.grow(ts, "rect", 6)
    assert len(patch) == 127
    assert tiling.detect_collisions(ts, patch)["pairs"] == []

    tri = tiling.builtin_tileset("fractal-tri")
    report = tiling.detect_collisions(tri, tiling.grow(tri, "tri", 8))
    assert report["pairs"]
    assert report["first_depth"] <= 8


def test_svg_and_stats():
    ts = tiling.builtin_tileset("p2")
    patch = tiling.penrose(ts, "star", 2)
    svg = tiling.to_svg(patch, ts)
    assert svg.startswith("<?xml") and "<svg" in svg
    assert svg == tiling.to_svg(patch, ts)  # deterministic
    s = tiling.stats(patch, ts)
    assert s["placements"] == len(patch)
    assert s["covered_area"] <= s["hull_area"] + 1e-9


def test_tilespec_round_trip_and_errors():
    ts = tiling.builtin_tileset("square-swirl")
    text = ts.serialize()
    again = tiling.parse_tileset(text)
    assert again.serialize() == text
    with pytest.raises(tiling.TileSpecError):
        tiling.parse_tileset("tileset v2\n")


def test_patch_text_round_trip():
    ts = tiling.builtin_tileset("fractal-rect")
    patch = tiling.grow(ts, "rect", 2)
    again = tiling.patch_from_text(patch.to_text())
    assert again.to_text() == patch.to_text()


def test_svg_is_well_formed_xml():
    import xml.etree.ElementTree as ET

    for name, args in [
        ("square-swirl", ("square", 2, 2, "swirl")),
        ("p2", None),
        ("fractal-tri", None),
    ]:
        ts = tiling.builtin_tileset(name)
        if name == "square-swirl":
            patch = tiling.tessellate(ts, *args[:1], rows=args[1], cols=args[2], mode=args[3])
        elif name == "p2":
            patch = tiling.penrose(ts, "sun", 3)
        else:
            patch = tiling.grow(ts, "tri", 4)
        root = ET.fromstring(tiling.to_svg(patch, ts))
        assert root.tag.endswith("svg")
        uses = root.findall(".//{http://www.w3.org/2000/svg}use")
        assert len(uses) >= len(patch)
