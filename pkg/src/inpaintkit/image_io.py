"""Image file reading and writing.

Binary PGM (P5, maxval 255) is the canonical format and is parsed here
directly. 8-bit grayscale PNG works through Pillow when it is installed
(the "png" extra). Pixels map to float64 intensities in [0, 1] on read
and are quantized back to bytes on write, so a write/read round trip
reproduces the quantized values exactly.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .core import as_image

_WHITESPACE = b" \t\n\r\x0b\x0c"


class ImageFormatError(ValueError):
    """Unreadable or unsupported image file."""


def quantize(img) -> np.ndarray:
    """Map [0, 1] intensities to uint8, rounding and clipping."""
    img = as_image(img)
    return np.clip(np.rint(img * 255.0), 0, 255).astype(np.uint8)


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    # skip whitespace and '#' comments, then read one token
    n = len(data)
    while pos < n:
        b = data[pos : pos + 1]
        if b == b"#":
            while pos < n and data[pos : pos + 1] != b"\n":
                pos += 1
        elif b in _WHITESPACE:
            pos += 1
        else:
            break
    if pos >= n:
        raise ImageFormatError(f"unexpected end of header at byte {pos}")
    start = pos
    while pos < n and data[pos : pos + 1] not in _WHITESPACE and data[pos : pos + 1] != b"#":
        pos += 1
    return data[start:pos], pos


def _header_int(data: bytes, pos: int, what: str) -> tuple[int, int]:
    token, end = _next_token(data, pos)
    try:
        value = int(token)
    except ValueError:
        raise ImageFormatError(f"bad {what} {token!r} at byte {pos}") from None
    return value, end


def read_pgm(path) -> np.ndarray:
    """Read a binary PGM (P5) file into a [0, 1] float image."""
    data = Path(path).read_bytes()
    magic, pos = _next_token(data, 0)
    if magic != b"P5":
        if magic in (b"P3", b"P6"):
            raise ImageFormatError(
                f"{magic.decode('ascii', 'replace')} is a color PPM; convert to grayscale first"
            )
        raise ImageFormatError(f"not a binary PGM (magic {magic!r} at byte 0)")
    width, pos = _header_int(data, pos, "width")
    height, pos = _header_int(data, pos, "height")
    maxval, pos = _header_int(data, pos, "maxval")
    if width < 1 or height < 1:
        raise ImageFormatError(f"bad dimensions {width}x{height}")
    if maxval > 255:
        raise ImageFormatError(f"maxval {maxval} unsupported; only 8-bit (maxval 255) PGM is handled")
    if maxval < 1:
        raise ImageFormatError(f"bad maxval {maxval}")
    if pos >= len(data) or data[pos : pos + 1] not in _WHITESPACE:
        raise ImageFormatError(f"missing whitespace after maxval at byte {pos}")
    pos += 1  # exactly one whitespace byte separates header and raster
    need = width * height
    raster = data[pos : pos + need]
    if len(raster) < need:
        raise ImageFormatError(
            f"raster truncated at byte {pos + len(raster)}: need {need} pixels, got {len(raster)}"
        )
    img = np.frombuffer(raster, dtype=np.uint8).reshape(height, width)
    return img.astype(np.float64) / float(maxval)


def write_pgm(img, path) -> None:
    """Write a [0, 1] float image as binary PGM (P5, maxval 255)."""
    q = quantize(img)
    header = f"P5\n{q.shape[1]} {q.shape[0]}\n255\n".encode("ascii")
    Path(path).write_bytes(header + q.tobytes())


def _require_pillow():
    try:
        from PIL import Image
    except ImportError:
        raise ImageFormatError(
            "PNG support needs Pillow; install the png extra (pip install 'inpaintkit[png]')"
        ) from None
    return Image


def read_png(path) -> np.ndarray:
    """Read an 8-bit grayscale PNG into a [0, 1] float image."""
    pil = _require_pillow()
    with pil.open(path) as im:
        if im.mode == "1":
            im = im.convert("L")
        if im.mode != "L":
            if im.mode in ("I", "I;16", "I;16B", "I;16L"):
                raise ImageFormatError(f"{path}: 16-bit PNG unsupported; only 8-bit grayscale is handled")
            raise ImageFormatError(
                f"{path}: mode {im.mode} unsupported; convert to 8-bit grayscale first"
            )
        arr = np.asarray(im, dtype=np.uint8)
    return arr.astype(np.float64) / 255.0


def write_png(img, path) -> None:
    """Write a [0, 1] float image as 8-bit grayscale PNG."""
    pil = _require_pillow()
    pil.fromarray(quantize(img), mode="L").save(Path(path), format="PNG")


def read_image(path) -> np.ndarray:
    """Read a grayscale image by file extension (.pgm/.pnm or .png)."""
    suffix = Path(path).suffix.lower()
    if suffix in (".pgm", ".pnm"):
        return read_pgm(path)
    if suffix == ".png":
        return read_png(path)
    raise ImageFormatError(f"unsupported image extension {suffix!r} (use .pgm or .png)")


def write_image(img, path) -> None:
    """Write a grayscale image by file extension (.pgm/.pnm or .png)."""
    suffix = Path(path).suffix.lower()
    if suffix in (".pgm", ".pnm"):
        write_pgm(img, path)
    elif suffix == ".png":
        write_png(img, path)
    else:
        raise ImageFormatError(f"unsupported image extension {suffix!r} (use .pgm or .png)")
