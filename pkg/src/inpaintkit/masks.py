"""Mask generation and damage application.

Masks follow the package-wide convention: 1 = known pixel, 0 = missing.
Both generators are fully deterministic for a given argument tuple.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import as_image, as_mask, require_same_shape
from .font5x7 import GLYPH_COLS, GLYPH_ROWS, glyph_bitmap

# glyph cell advance: 1 blank column between glyphs, 5 blank rows between lines
GLYPH_ADVANCE = GLYPH_COLS + 1
LINE_ADVANCE = GLYPH_ROWS + 5


def random_mask(rows: int, cols: int, missing_fraction: float, seed: int) -> np.ndarray:
    """Mask with exactly round(missing_fraction * rows * cols) missing pixels.

    Pixel positions are drawn by a seeded shuffle, so the count is exact
    rather than binomial and the result is reproducible.
    """
    if rows < 1 or cols < 1:
        raise ValueError(f"mask size must be positive, got {rows}x{cols}")
    if not (0.0 <= missing_fraction <= 1.0):
        raise ValueError(f"missing_fraction must be in [0, 1], got {missing_fraction}")
    total = rows * cols
    k = int(round(missing_fraction * total))
    rng = np.random.default_rng(seed)
    order = rng.permutation(total)
    bits = np.ones(total, dtype=np.uint8)
    bits[order[:k]] = 0
    return bits.reshape(rows, cols)


def text_mask(rows: int, cols: int, text: str, scale: int = 1) -> np.ndarray:
    """Mask whose missing pixels spell repeated text in a 5x7 bitmap font.

    The text tiles the whole image starting at the origin, advancing
    GLYPH_ADVANCE * scale columns per character and LINE_ADVANCE * scale
    rows per line; the character stream continues across line breaks.
    Characters without a glyph render blank but still advance.
    """
    if rows < 1 or cols < 1:
        raise ValueError(f"mask size must be positive, got {rows}x{cols}")
    if scale < 1:
        raise ValueError(f"scale must be >= 1, got {scale}")
    if not text:
        raise ValueError("text must be non-empty")
    bits = np.ones((rows, cols), dtype=np.uint8)
    block = np.ones((scale, scale), dtype=np.uint8)
    k = 0
    for top in range(0, rows, LINE_ADVANCE * scale):
        for left in range(0, cols, GLYPH_ADVANCE * scale):
            glyph = glyph_bitmap(text[k % len(text)])
            k += 1
            if not glyph.any():
                continue
            ink = np.kron(glyph, block)  # scaled to (7*scale, 5*scale)
            h = min(ink.shape[0], rows - top)
            w = min(ink.shape[1], cols - left)
            region = bits[top : top + h, left : left + w]
            region[ink[:h, :w] == 1] = 0
    return bits


def apply_damage(img, mask) -> np.ndarray:
    """Zero out the missing pixels of an image."""
    img = as_image(img)
    mask = as_mask(mask)
    require_same_shape(img, mask, "image and mask")
    return np.where(mask == 1, img, 0.0)


def mask_from_image(img) -> np.ndarray:
    """Interpret an image as a mask: 0 = missing, any nonzero = known."""
    img = as_image(img)
    return (img > 0).astype(np.uint8)


def mask_to_image(mask) -> np.ndarray:
    """Render a mask as a black/white image (known pixels white)."""
    return as_mask(mask).astype(np.float64)


@dataclass(frozen=True)
class MaskSpec:
    """Recipe for building a mask at a given image size.

    kind is one of "random", "text" or "file". Random masks use
    missing_fraction and seed; text masks use text and scale; file masks
    load an image whose zero pixels mark the missing set.
    """

    kind: str
    missing_fraction: float = 0.0
    seed: int = 0
    text: str = ""
    scale: int = 1
    path: str | None = None

    def __post_init__(self):
        if self.kind not in ("random", "text", "file"):
            raise ValueError(f"unknown mask kind {self.kind!r}")
        if self.kind == "file" and not self.path:
            raise ValueError("file mask needs a path")
        if self.kind == "text" and not self.text:
            raise ValueError("text mask needs text")

    @property
    def mask_id(self) -> str:
        if self.kind == "random":
            return f"random-{self.missing_fraction:g}-seed{self.seed}"
        if self.kind == "text":
            return f"text-scale{self.scale}"
        from pathlib import Path

        return f"file-{Path(self.path).stem}"

    def build(self, rows: int, cols: int) -> np.ndarray:
        if self.kind == "random":
            return random_mask(rows, cols, self.missing_fraction, self.seed)
        if self.kind == "text":
            return text_mask(rows, cols, self.text, self.scale)
        from .image_io import read_image  # deferred so masks does not hard-depend on io

        mask = mask_from_image(read_image(self.path))
        if mask.shape != (rows, cols):
            raise ValueError(f"mask file is {mask.shape[0]}x{mask.shape[1]}, need {rows}x{cols}")
        return mask
