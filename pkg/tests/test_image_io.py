"""Tests for PGM parsing/writing, PNG support and quantization."""

from __future__ import annotations

import numpy as np
import pytest

from inpaintkit.image_io import (
    ImageFormatError,
    quantize,
    read_image,
    read_pgm,
    write_image,
    write_pgm,
)


def test_quantize_endpoints_and_rounding():
    img = np.array([[0.0, 1.0], [0.5, 2.0]])
    q = quantize(img)
    assert q.dtype == np.uint8
    assert q[0, 0] == 0 and q[0, 1] == 255
    assert q[1, 0] == 128  # 127.5 rounds to the even neighbour
    assert q[1, 1] == 255  # clipped


def test_pgm_roundtrip_is_byte_identical(tmp_path):
    rng = np.random.default_rng(31)
    img = rng.uniform(size=(9, 13))
    first = tmp_path / "a.pgm"
    second = tmp_path / "b.pgm"
    write_pgm(img, first)
    back = read_pgm(first)
    assert np.array_equal(quantize(back), quantize(img))
    write_pgm(back, second)
    assert first.read_bytes() == second.read_bytes()


def test_pgm_header_layout(tmp_path):
    path = tmp_path / "c.pgm"
    write_pgm(np.zeros((2, 3)), path)
    assert path.read_bytes() == b"P5\n3 2\n255\n" + b"\x00" * 6


def test_pgm_reader_tolerates_comments_and_whitespace(tmp_path):
    raw = b"P5 # magic\n# a comment line\n  3\t2 #dims\n255\n" + bytes(range(6))
    path = tmp_path / "d.pgm"
    path.write_bytes(raw)
    img = read_pgm(path)
    assert img.shape == (2, 3)
    assert img[1, 2] == 5.0 / 255.0


def test_pgm_low_maxval_rescales(tmp_path):
    raw = b"P5\n2 1\n100\n" + bytes([0, 50])
    path = tmp_path / "e.pgm"
    path.write_bytes(raw)
    img = read_pgm(path)
    assert img[0, 1] == 0.5


def test_pgm_16_bit_rejected(tmp_path):
    path = tmp_path / "wide.pgm"
    path.write_bytes(b"P5\n2 2\n65535\n" + b"\x00" * 8)
    with pytest.raises(ImageFormatError, match="maxval 65535"):
        read_pgm(path)


def test_color_ppm_rejected_with_guidance(tmp_path):
    path = tmp_path / "color.pgm"
    path.write_bytes(b"P6\n2 2\n255\n" + b"\x00" * 12)
    with pytest.raises(ImageFormatError, match="color PPM"):
        read_pgm(path)


def test_bad_magic_rejected(tmp_path):
    path = tmp_path / "junk.pgm"
    path.write_bytes(b"JUNKDATA")
    with pytest.raises(ImageFormatError, match="magic"):
        read_pgm(path)


def test_truncated_raster_reports_byte_offset(tmp_path):
    path = tmp_path / "short.pgm"
    path.write_bytes(b"P5\n4 4\n255\n" + b"\x00" * 7)
    with pytest.raises(ImageFormatError, match="truncated at byte 18"):
        read_pgm(path)


def test_truncated_header_rejected(tmp_path):
    path = tmp_path / "header.pgm"
    path.write_bytes(b"P5\n4")
    with pytest.raises(ImageFormatError, match="end of header"):
        read_pgm(path)


def test_unknown_extension_rejected(tmp_path):
    with pytest.raises(ImageFormatError, match="extension"):
        read_image(tmp_path / "img.bmp")
    with pytest.raises(ImageFormatError, match="extension"):
        write_image(np.zeros((2, 2)), tmp_path / "img.tiff")


def test_png_roundtrip(tmp_path):
    pytest.importorskip("PIL")
    rng = np.random.default_rng(32)
    img = rng.uniform(size=(11, 7))
    path = tmp_path / "img.png"
    write_image(img, path)
    back = read_image(path)
    assert np.array_equal(quantize(back), quantize(img))


def test_color_png_rejected(tmp_path):
    pil = pytest.importorskip("PIL.Image")
    path = tmp_path / "rgb.png"
    pil.new("RGB", (4, 4), (10, 20, 30)).save(path)
    with pytest.raises(ImageFormatError, match="grayscale"):
        read_image(path)


def test_bilevel_png_promotes_to_grayscale(tmp_path):
    pil = pytest.importorskip("PIL.Image")
    path = tmp_path / "bw.png"
    pil.new("1", (3, 3), 1).save(path)
    img = read_image(path)
    assert img.shape == (3, 3)
    assert np.all(img == 1.0)


def test_pnm_extension_uses_the_pgm_codec(tmp_path):
    img = np.linspace(0.0, 1.0, 12).reshape(3, 4)
    path = tmp_path / "img.pnm"
    write_image(img, path)
    assert np.array_equal(quantize(read_image(path)), quantize(img))
