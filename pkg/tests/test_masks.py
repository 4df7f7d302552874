"""Tests for mask generation, damage application and mask specs."""

from __future__ import annotations

import numpy as np
import pytest

from inpaintkit.font5x7 import glyph_bitmap
from inpaintkit.masks import (
    GLYPH_ADVANCE,
    LINE_ADVANCE,
    MaskSpec,
    apply_damage,
    mask_from_image,
    mask_to_image,
    random_mask,
    text_mask,
)


def test_random_mask_exact_counts_on_512_square():
    mask = random_mask(512, 512, 0.3, seed=42)
    assert int((mask == 0).sum()) == round(0.3 * 512 * 512)  # 78643
    mask = random_mask(512, 512, 0.5, seed=42)
    assert int((mask == 0).sum()) == 131072


def test_random_mask_determinism_and_seed_sensitivity():
    a = random_mask(64, 64, 0.4, seed=1)
    b = random_mask(64, 64, 0.4, seed=1)
    c = random_mask(64, 64, 0.4, seed=2)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_random_mask_extreme_fractions():
    assert random_mask(8, 8, 0.0, seed=0).all()
    assert not random_mask(8, 8, 1.0, seed=0).any()


def test_random_mask_validation():
    with pytest.raises(ValueError):
        random_mask(0, 8, 0.5, seed=0)
    with pytest.raises(ValueError):
        random_mask(8, 8, 1.5, seed=0)


def test_text_mask_single_glyph_is_the_exact_complement():
    glyph = glyph_bitmap("I")
    mask = text_mask(7, 5, "I")
    assert np.array_equal(mask, 1 - glyph)


def test_text_mask_space_leaves_everything_known():
    assert text_mask(7, 5, " ").all()


def test_text_mask_scaling_matches_kron():
    glyph = glyph_bitmap("I")
    mask = text_mask(14, 10, "I", scale=2)
    assert np.array_equal(mask, 1 - np.kron(glyph, np.ones((2, 2), dtype=np.uint8)))


def test_text_mask_advances_and_wraps_the_character_stream():
    # two glyph cells per line on a 24-column image; the stream continues
    # onto the next line instead of restarting
    mask = text_mask(LINE_ADVANCE + 7, GLYPH_ADVANCE * 2, "AB")
    a = glyph_bitmap("A")
    b = glyph_bitmap("B")
    assert np.array_equal(mask[:7, :5], 1 - a)
    assert np.array_equal(mask[:7, GLYPH_ADVANCE : GLYPH_ADVANCE + 5], 1 - b)
    # next line starts back at "A" (stream index 2 wraps around)
    assert np.array_equal(mask[LINE_ADVANCE : LINE_ADVANCE + 7, :5], 1 - a)
    # the gap column between glyphs stays known
    assert mask[:, 5].all()


def test_text_mask_clips_at_the_image_edge():
    mask = text_mask(4, 3, "I")
    glyph = glyph_bitmap("I")
    assert np.array_equal(mask, 1 - glyph[:4, :3])


def test_text_mask_default_text_coverage_stays_moderate():
    for scale in (1, 2, 3, 4):
        mask = text_mask(512, 512, "Lorem ipsum dolor sit amet", scale=scale)
        frac = float((mask == 0).mean())
        assert 0.0 < frac < 0.5


def test_text_mask_validation():
    with pytest.raises(ValueError):
        text_mask(8, 8, "")
    with pytest.raises(ValueError):
        text_mask(8, 8, "x", scale=0)


def test_apply_damage_zeroes_missing_pixels():
    img = np.full((3, 3), 0.8)
    mask = np.array([[1, 0, 1], [0, 1, 0], [1, 0, 1]], dtype=np.uint8)
    damaged = apply_damage(img, mask)
    assert np.array_equal(damaged, np.where(mask == 1, 0.8, 0.0))


def test_mask_image_roundtrip():
    mask = random_mask(16, 16, 0.3, seed=3)
    assert np.array_equal(mask_from_image(mask_to_image(mask)), mask)


def test_mask_spec_ids():
    assert MaskSpec(kind="random", missing_fraction=0.3, seed=42).mask_id == "random-0.3-seed42"
    assert MaskSpec(kind="text", text="hi", scale=2).mask_id == "text-scale2"
    assert MaskSpec(kind="file", path="/tmp/holes.pgm").mask_id == "file-holes"


def test_mask_spec_builds_each_kind(tmp_path):
    spec = MaskSpec(kind="random", missing_fraction=0.25, seed=1)
    assert np.array_equal(spec.build(16, 16), random_mask(16, 16, 0.25, seed=1))

    spec = MaskSpec(kind="text", text="I")
    assert np.array_equal(spec.build(7, 5), text_mask(7, 5, "I"))

    from inpaintkit.image_io import write_image

    path = tmp_path / "m.pgm"
    write_image(mask_to_image(random_mask(8, 8, 0.5, seed=2)), path)
    spec = MaskSpec(kind="file", path=str(path))
    assert np.array_equal(spec.build(8, 8), random_mask(8, 8, 0.5, seed=2))
    with pytest.raises(ValueError):
        spec.build(9, 9)


def test_mask_spec_validation():
    with pytest.raises(ValueError):
        MaskSpec(kind="blob")
    with pytest.raises(ValueError):
        MaskSpec(kind="file")
    with pytest.raises(ValueError):
        MaskSpec(kind="text")
