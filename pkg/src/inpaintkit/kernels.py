"""Diffusion kernels and the rotated directional kernel constructor."""

from __future__ import annotations

import math

import numpy as np


def diamond_kernel() -> np.ndarray:
    """Isotropic 4-neighbour averaging kernel."""
    return np.array(
        [
            [0.00, 0.25, 0.00],
            [0.25, 0.00, 0.25],
            [0.00, 0.25, 0.00],
        ]
    )


def diag_kernel() -> np.ndarray:
    """Kernel whose weight concentrates on the main diagonal."""
    return np.array(
        [
            [0.38, 0.04, 0.04],
            [0.04, 0.00, 0.04],
            [0.04, 0.04, 0.38],
        ]
    )


def normalize(kernel) -> np.ndarray:
    """Scale a kernel so its weights sum to 1."""
    k = np.asarray(kernel, dtype=np.float64)
    total = float(k.sum())
    if total <= 0.0:
        raise ValueError("degenerate kernel: weights sum to zero")
    return k / total


_CUBIC_A = -0.5  # Catmull-Rom


def _cubic_weight(t: float) -> float:
    at = abs(t)
    if at <= 1.0:
        return ((_CUBIC_A + 2.0) * at - (_CUBIC_A + 3.0)) * at * at + 1.0
    if at < 2.0:
        return (((at - 5.0) * at + 8.0) * at - 4.0) * _CUBIC_A
    return 0.0


def bicubic_sample(grid, x: float, y: float) -> float:
    """Cubic convolution sample of a small grid at continuous (x, y).

    x runs along columns and y along rows; integer coordinates hit grid
    cells exactly. Out-of-range taps are clamped to the nearest edge cell
    (replicate extension).
    """
    g = np.asarray(grid, dtype=np.float64)
    if g.ndim != 2 or g.size == 0:
        raise ValueError(f"expected a non-empty 2-D grid, got shape {np.shape(grid)}")
    last_row = g.shape[0] - 1
    last_col = g.shape[1] - 1
    bx = math.floor(x)
    by = math.floor(y)
    total = 0.0
    for j in range(4):
        iy = by - 1 + j
        wy = _cubic_weight(y - iy)
        if wy == 0.0:
            continue
        r = min(max(iy, 0), last_row)
        for i in range(4):
            ix = bx - 1 + i
            wx = _cubic_weight(x - ix)
            if wx == 0.0:
                continue
            c = min(max(ix, 0), last_col)
            total += wy * wx * g[r, c]
    return total


def rotate_kernel(theta_deg: float) -> np.ndarray:
    """Directional kernel for orientation angle theta, in degrees.

    Treats the diagonal kernel as a tiny image and rotates it by
    theta + 45 degrees about its centre, resampling each target cell from
    the source by bicubic interpolation (inverse mapping). Rotation
    applies the plain rotation matrix to (x=col, y=row) offsets; with the
    row axis pointing down that turns the picture clockwise on screen.
    Negative bicubic overshoot is clamped to zero and the result is
    normalized, so the output is a valid averaging kernel for every
    angle. Angles 180 degrees apart give the same kernel up to floating
    point noise.
    """
    angle = math.radians(theta_deg + 45.0)
    # inverse map: rotate each target offset by -angle back into the source
    cos_a = math.cos(-angle)
    sin_a = math.sin(-angle)
    src = diag_kernel()
    out = np.empty((3, 3))
    for r in range(3):
        for c in range(3):
            x = float(c - 1)
            y = float(r - 1)
            sx = x * cos_a - y * sin_a
            sy = x * sin_a + y * cos_a
            out[r, c] = bicubic_sample(src, 1.0 + sx, 1.0 + sy)
    np.clip(out, 0.0, None, out=out)
    return normalize(out)
