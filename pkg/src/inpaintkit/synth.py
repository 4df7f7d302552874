"""Deterministic synthetic grayscale test images.

Benchmark images combine oriented structure (stripes, rings, woven
zones) with smooth shading, all closed-form, so the evaluation corpus
needs no external files and never changes between runs. All generators
return float64 images in [0, 1].
"""

from __future__ import annotations

import numpy as np


def _coords(size: int):
    if size < 1:
        raise ValueError(f"size must be positive, got {size}")
    return np.mgrid[0:size, 0:size].astype(np.float64)


def stripes(size: int, period: float, angle_deg: float, amplitude: float = 1.0, hardness: float = 0.0) -> np.ndarray:
    """Sinusoidal stripes running along angle_deg (0 = horizontal stripes).

    hardness in [0, 1) sharpens the profile toward a square wave by
    pushing the sinusoid through a scaled tanh; 0 keeps it sinusoidal.
    """
    yy, xx = _coords(size)
    t = np.radians(angle_deg)
    # phase varies across the stripes, i.e. perpendicular to their direction
    phase = (np.cos(t) * yy + np.sin(t) * xx) * (2.0 * np.pi / period)
    wave = np.sin(phase)
    if hardness > 0.0:
        gain = 1.0 / (1.0 - hardness)
        wave = np.tanh(gain * wave) / np.tanh(gain)
    return 0.5 + 0.5 * amplitude * wave


def rings(size: int, period: float, amplitude: float = 1.0, center=None) -> np.ndarray:
    """Concentric sinusoidal rings; orientation varies smoothly with position."""
    yy, xx = _coords(size)
    if center is None:
        center = ((size - 1) / 2.0, (size - 1) / 2.0)
    r = np.hypot(yy - center[0], xx - center[1])
    return 0.5 + 0.5 * amplitude * np.sin(2.0 * np.pi * r / period)


def gradient(size: int, angle_deg: float = 30.0) -> np.ndarray:
    """Linear ramp from 0 to 1 along the given direction."""
    yy, xx = _coords(size)
    t = np.radians(angle_deg)
    g = np.cos(t) * yy + np.sin(t) * xx
    g -= g.min()
    peak = g.max()
    return g / peak if peak > 0 else np.zeros_like(g)


def blobs(size: int, centers, sigma: float, amplitude: float = 1.0) -> np.ndarray:
    """Sum of Gaussian bumps; centers are (row, col) pairs in [0, 1] units."""
    yy, xx = _coords(size)
    out = np.zeros((size, size))
    for cy, cx in centers:
        out += np.exp(-(((yy - cy * size) ** 2 + (xx - cx * size) ** 2) / (2.0 * sigma**2)))
    return amplitude * out


def woven_stripes(size: int, zone: float, angle_a: float, angle_b: float, period: float = 12.0, amplitude: float = 0.62, hardness: float = 0.0) -> np.ndarray:
    """Checkerboard of square zones alternating between two stripe angles.

    Orientation is locally clean but flips every `zone` pixels, so small
    analysis windows see one direction while windows straddling a zone
    boundary see a mix.
    """
    yy, xx = _coords(size)
    z = ((yy // zone).astype(int) + (xx // zone).astype(int)) % 2
    a = stripes(size, period, angle_a, amplitude, hardness)
    b = stripes(size, period, angle_b, amplitude, hardness)
    return np.where(z == 0, a, b)


def micro_texture(size: int, amplitude: float, periods=(5.0, 7.0, 11.0), angles_deg=(15.0, 75.0, 130.0)) -> np.ndarray:
    """Faint isotropic-ish texture: several incommensurate waves summed.

    Zero mean; scale by amplitude before adding to a base image.
    """
    yy, xx = _coords(size)
    out = np.zeros((size, size))
    for period, ang in zip(periods, angles_deg):
        t = np.radians(ang)
        out += np.sin((np.cos(t) * yy + np.sin(t) * xx) * (2.0 * np.pi / period))
    return amplitude * out / len(periods)


def compose(*layers) -> np.ndarray:
    """Sum image layers and clip to [0, 1]."""
    total = layers[0].astype(np.float64, copy=True)
    for layer in layers[1:]:
        total = total + layer
    return np.clip(total, 0.0, 1.0)


def standard_suite(size: int = 512) -> dict[str, np.ndarray]:
    """Five deterministic oriented-texture benchmark images.

    Each image pairs a dominant oriented pattern with gentle smooth
    shading: strong structure along a local direction, plus the smooth
    intensity drift found in photographs. Fine isotropic texture is
    deliberately left out; it drowns the orientation statistics that the
    directional algorithm relies on.
    """
    half = 0.5
    shading = lambda ang: 0.25 * (gradient(size, ang) - half)  # noqa: E731
    bumps = blobs(size, [(0.3, 0.7), (0.75, 0.25)], sigma=size / 5.0, amplitude=0.22)
    zone = max(size * 48.0 / 512.0, 16.0)
    suite = {
        "stripes-horizontal": compose(
            stripes(size, period=14.0, angle_deg=0.0, amplitude=0.62, hardness=0.8),
            shading(60.0),
        ),
        "stripes-diagonal": compose(
            stripes(size, period=16.0, angle_deg=45.0, amplitude=0.62),
            bumps - bumps.mean(),
        ),
        "weave-axis": compose(
            woven_stripes(size, zone, 0.0, 90.0, period=12.0, amplitude=0.62),
            shading(150.0),
        ),
        "weave-diagonal": compose(
            woven_stripes(size, zone, 45.0, 135.0, period=12.0, amplitude=0.62),
            shading(20.0),
        ),
        "rings": compose(
            rings(size, period=17.0, amplitude=0.62),
            bumps - bumps.mean(),
        ),
    }
    return suite
