"""Visual transmutation kernels: per-cell maps, fractal noise, the spectral star.

The level-2 "burn" combines a logistic-map intensity transform, a value-noise
field and a four-quadrant FFT star; the level-3 dissolver averages two
parametric per-cell expression families; the level-4 compositor places a
hand-scaled star over the frame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .matrix import (
    ArgbMatrix,
    DimensionMismatchError,
    add_sat,
    average,
    quantize,
    subtract_sat,
)
from .geometry import repos, scale_about_center
from .tracking import BoundingBox

_SEED_MASK = 0xFFFFFFFFFFFFFFFF

# BT.601 luminance weights.
_LUMA_R, _LUMA_G, _LUMA_B = 0.299, 0.587, 0.114


@dataclass(frozen=True)
class NoiseParams:
    seed: int
    octaves: int = 4
    persistence: float = 0.5
    base_cell_size: int = 16

    def __post_init__(self):
        if self.octaves < 1:
            raise ValueError(f"octaves must be >= 1, got {self.octaves}")
        if not 0.0 < self.persistence <= 1.0:
            raise ValueError(f"persistence {self.persistence} outside (0, 1]")
        if self.base_cell_size < 2:
            raise ValueError(f"base_cell_size must be >= 2, got {self.base_cell_size}")


@dataclass(frozen=True)
class StarParams:
    gain: float = 1.0
    min_scale: float = 0.1
    max_scale: float = 1.0

    def __post_init__(self):
        if self.gain <= 0:
            raise ValueError(f"gain must be positive, got {self.gain}")
        if not 0.0 < self.min_scale < self.max_scale:
            raise ValueError(
                f"need 0 < min_scale < max_scale, got ({self.min_scale}, {self.max_scale})"
            )


def _apply_rgb_lut(m: ArgbMatrix, lut: np.ndarray) -> ArgbMatrix:
    """Remap R, G, B through a 256-entry table; alpha passes through."""
    a, r, g, b = m.planes
    return ArgbMatrix._adopt(np.stack([a, lut[r], lut[g], lut[b]]))


def logistic_transmute(m: ArgbMatrix, mu: float) -> ArgbMatrix:
    """Per-cell logistic map on R, G, B: x' = mu * x * (1 - x) with x = cell/255."""
    if not 0.0 <= mu <= 4.0:
        raise ValueError(f"mu {mu} outside [0, 4]")
    x = np.arange(256, dtype=np.float64) / 255.0
    lut = quantize(255.0 * mu * x * (1.0 - x))
    return _apply_rgb_lut(m, lut)


def dissolve(m: ArgbMatrix, param: float) -> ArgbMatrix:
    """Average of two parametric per-cell expressions on R, G, B.

    With x = cell/255: a logistic family 4*param*x*(1-x) and a sine-map family
    |sin(pi*(1+3*param)*x)|, averaged and rescaled to 8 bits. One centralized
    stand-in family, so it can be swapped without touching the pipeline.
    """
    if not 0.0 <= param <= 1.0:
        raise ValueError(f"param {param} outside [0, 1]")
    x = np.arange(256, dtype=np.float64) / 255.0
    e2 = 4.0 * param * x * (1.0 - x)
    e3 = np.abs(np.sin(np.pi * (1.0 + 3.0 * param) * x))
    lut = quantize(255.0 * (e2 + e3) / 2.0)
    return _apply_rgb_lut(m, lut)


@lru_cache(maxsize=16)
def _noise_field(width: int, height: int, p: NoiseParams) -> np.ndarray:
    """Deterministic multi-octave value-noise field in [0, 1], read-only."""
    acc = np.zeros((height, width), dtype=np.float64)
    total = 0.0
    for octave in range(p.octaves):
        spacing = p.base_cell_size / (2.0**octave)
        xs = np.arange(width, dtype=np.float64) / spacing
        ys = np.arange(height, dtype=np.float64) / spacing
        ix = np.floor(xs).astype(np.int64)
        iy = np.floor(ys).astype(np.int64)
        tx = xs - ix
        ty = ys - iy
        rng = np.random.default_rng([p.seed & _SEED_MASK, octave])
        lattice = rng.random((int(iy[-1]) + 2, int(ix[-1]) + 2))
        top = lattice[iy[:, None], ix[None, :]] * (1.0 - tx) + lattice[
            iy[:, None], ix[None, :] + 1
        ] * tx
        bottom = lattice[iy[:, None] + 1, ix[None, :]] * (1.0 - tx) + lattice[
            iy[:, None] + 1, ix[None, :] + 1
        ] * tx
        acc += (p.persistence**octave) * (top * (1.0 - ty[:, None]) + bottom * ty[:, None])
        total += p.persistence**octave
    field = acc / total
    field.setflags(write=False)
    return field


def fractal_noise(width: int, height: int, p: NoiseParams) -> ArgbMatrix:
    """Value-noise matrix: octaves of bilinear lattices summed by persistence.

    Written identically to R, G and B with alpha 255; bitwise deterministic in
    (width, height, params).
    """
    if width < 1 or height < 1:
        raise ValueError("width and height must be positive")
    gray = quantize(255.0 * _noise_field(int(width), int(height), p))
    alpha = np.full((height, width), 255, dtype=np.uint8)
    return ArgbMatrix._adopt(np.stack([alpha, gray, gray, gray]))


def _next_pow2(n: int) -> int:
    return 1 << max(n - 1, 0).bit_length() if n > 1 else 1


def fft_star(m: ArgbMatrix, p: StarParams) -> ArgbMatrix:
    """Log-magnitude 2D spectrum of the frame's luminance, mirrored into 4 quadrants.

    The low-frequency corner lands at the frame center and the field is
    reflected left-right and top-bottom, so the output is exactly symmetric:
    out(x, y) == out(W-1-x, y) == out(x, H-1-y). Non-power-of-two frames are
    zero-padded for the transform and cropped back.
    """
    w, h = m.width, m.height
    luma = quantize(
        _LUMA_R * m.r.astype(np.float64)
        + _LUMA_G * m.g.astype(np.float64)
        + _LUMA_B * m.b.astype(np.float64)
    ).astype(np.float64)
    padded = np.zeros((_next_pow2(h), _next_pow2(w)), dtype=np.float64)
    padded[:h, :w] = luma
    log_mag = np.log1p(p.gain * np.abs(np.fft.rfft2(padded)))
    peak = float(log_mag.max())

    half_w = w - w // 2
    half_h = h - h // 2
    if peak <= 0.0:
        field = np.zeros((h, w), dtype=np.uint8)
    else:
        quadrant = quantize(255.0 * log_mag[:half_h, :half_w] / peak)
        xs = np.arange(w)
        ys = np.arange(h)
        u = np.where(xs >= w // 2, xs - w // 2, (w - 1 - xs) - w // 2)
        v = np.where(ys >= h // 2, ys - h // 2, (h - 1 - ys) - h // 2)
        field = quadrant[np.ix_(v, u)]
    alpha = np.full((h, w), 255, dtype=np.uint8)
    return ArgbMatrix._adopt(np.stack([alpha, field, field, field]))


def burn_stage(
    m: ArgbMatrix,
    progress_percent: float,
    noise_params: NoiseParams,
    star_params: StarParams,
) -> ArgbMatrix:
    """Level-2 look: logistic transmutation against noise, plus the spectral star.

    Progress drives the logistic parameter linearly from 2 (calm) to 4 (chaos).
    """
    if not 0.0 <= progress_percent <= 100.0:
        raise ValueError(f"progress_percent {progress_percent} outside [0, 100]")
    mu = 2.0 + 2.0 * progress_percent / 100.0
    transmuted = logistic_transmute(m, mu)
    noise = fractal_noise(m.width, m.height, noise_params)
    darkened = subtract_sat(transmuted, noise)
    blended = average(darkened, noise)
    return add_sat(blended, fft_star(m, star_params))


def star_composite(
    m: ArgbMatrix,
    star: ArgbMatrix,
    box: Optional[BoundingBox],
    p: StarParams,
) -> ArgbMatrix:
    """Scale the star by hand separation, move it to the hands, add it to the frame.

    The box width relative to the frame width sets the scale (clamped to the
    configured range); the box center sets the offset from the frame center.
    Without a box the frame passes through untouched.
    """
    if (m.width, m.height) != (star.width, star.height):
        raise DimensionMismatchError(
            f"star {star.width}x{star.height} does not match frame {m.width}x{m.height}"
        )
    if box is None:
        return m
    scale = min(max(box.width / m.width, p.min_scale), p.max_scale)
    dx = math.floor(box.center_x - (m.width - 1) / 2.0 + 0.5)
    dy = math.floor(box.center_y - (m.height - 1) / 2.0 + 0.5)
    placed = repos(scale_about_center(star, scale, scale), dx, dy)
    return add_sat(m, placed)
