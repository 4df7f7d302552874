"""Independent reference implementations the tests check the package against.

Nothing here shares code with the package. The iterative solver is
checked against a dense linear solve of its fixed-point system, kernel
rotation at right angles against plain array quarter turns, and the
bicubic sampler against a separate polynomial-form evaluator.
"""

from __future__ import annotations

import numpy as np


def harmonic_fill(damaged, mask, kernel) -> np.ndarray:
    """Exact fixed point of masked kernel averaging, by dense linear solve.

    Every unknown pixel p must satisfy
        I[p] = sum_q w[q] * I[clamp(p + q)]
    with known pixels held at their input values and out-of-range
    neighbours clamped to the border (replicate padding). That is a
    linear system in the unknown pixels; build it and solve it directly.
    Needs at least one known pixel, otherwise the system is singular.
    """
    img = np.asarray(damaged, dtype=np.float64)
    m = np.asarray(mask)
    k = np.asarray(kernel, dtype=np.float64)
    k = k / k.sum()
    rows, cols = img.shape
    unknown = [(int(r), int(c)) for r, c in np.argwhere(m == 0)]
    if not unknown:
        return img.copy()
    index = {rc: i for i, rc in enumerate(unknown)}
    a = np.eye(len(unknown))
    b = np.zeros(len(unknown))
    for i, (r, c) in enumerate(unknown):
        for dr in (-1, 0, 1):
            for dc in (-1, 0, 1):
                w = k[dr + 1, dc + 1]
                if w == 0.0:
                    continue
                rr = min(max(r + dr, 0), rows - 1)
                cc = min(max(c + dc, 0), cols - 1)
                if m[rr, cc] == 1:
                    b[i] += w * img[rr, cc]
                else:
                    a[i, index[(rr, cc)]] -= w
    values = np.linalg.solve(a, b)
    out = img.copy()
    for (r, c), value in zip(unknown, values):
        out[r, c] = value
    return out


def cubic_weight_direct(t: float, a: float = -0.5) -> float:
    """Cubic convolution weight, straight from the piecewise polynomials."""
    at = abs(float(t))
    if at <= 1.0:
        return float(np.polyval([a + 2.0, -(a + 3.0), 0.0, 1.0], at))
    if at < 2.0:
        return float(np.polyval([a, -5.0 * a, 8.0 * a, -4.0 * a], at))
    return 0.0


def bicubic_direct(grid, x: float, y: float) -> float:
    """Separable cubic convolution sample with edge-clamped taps."""
    g = np.asarray(grid, dtype=np.float64)
    bx = int(np.floor(x))
    by = int(np.floor(y))
    total = 0.0
    for j in range(-1, 3):
        wy = cubic_weight_direct(y - (by + j))
        for i in range(-1, 3):
            wx = cubic_weight_direct(x - (bx + i))
            r = min(max(by + j, 0), g.shape[0] - 1)
            c = min(max(bx + i, 0), g.shape[1] - 1)
            total += wy * wx * g[r, c]
    return total


def quarter_turn(kernel, turns: int) -> np.ndarray:
    """Visually clockwise quarter turns, row axis pointing down."""
    return np.rot90(np.asarray(kernel, dtype=np.float64), -turns)
