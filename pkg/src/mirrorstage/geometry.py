"""Spatial transforms over ARGB matrices: mirroring, affine warps, offsets, scaling.

Sampling is nearest-neighbor over inverse-mapped coordinates with zero
(transparent black) fill outside the source, so every transform is bit-exact
and cheap enough for the real-time path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix import ArgbMatrix


class SingularTransformError(ValueError):
    """The affine coefficient matrix is not invertible."""


@dataclass(frozen=True)
class AffineTransform2D:
    """Maps source (x, y) to (a*x + b*y + tx, c*x + d*y + ty)."""

    a: float
    b: float
    c: float
    d: float
    tx: float = 0.0
    ty: float = 0.0

    def __post_init__(self):
        if self.determinant() == 0.0:
            raise SingularTransformError("affine transform is singular (determinant 0)")

    def determinant(self) -> float:
        return self.a * self.d - self.b * self.c

    @classmethod
    def identity(cls) -> "AffineTransform2D":
        return cls(1.0, 0.0, 0.0, 1.0, 0.0, 0.0)

    @classmethod
    def mirror_y(cls, width: int) -> "AffineTransform2D":
        """The left-right flip of a ``width``-column frame."""
        return cls(-1.0, 0.0, 0.0, 1.0, float(width - 1), 0.0)


def _sample_nearest(m: ArgbMatrix, src_x: np.ndarray, src_y: np.ndarray) -> ArgbMatrix:
    """Gather all planes at rounded source coordinates, zero where out of range."""
    ix = np.floor(src_x + 0.5).astype(np.int64)
    iy = np.floor(src_y + 0.5).astype(np.int64)
    valid = (ix >= 0) & (ix < m.width) & (iy >= 0) & (iy < m.height)
    ixc = np.clip(ix, 0, m.width - 1)
    iyc = np.clip(iy, 0, m.height - 1)
    out = m.planes[:, iyc, ixc]
    out[:, ~valid] = 0
    return ArgbMatrix._adopt(out)


def mirror_y(m: ArgbMatrix) -> ArgbMatrix:
    """Reflect left-right: out(x, y) = in(width-1-x, y). An involution."""
    return ArgbMatrix._adopt(np.ascontiguousarray(m.planes[:, :, ::-1]))


def affine_transform(m: ArgbMatrix, t: AffineTransform2D) -> ArgbMatrix:
    """Apply an invertible affine map; destination cells sample the inverse-mapped source."""
    det = t.determinant()
    if det == 0.0:
        raise SingularTransformError("affine transform is singular (determinant 0)")
    ia, ib = t.d / det, -t.b / det
    ic, id_ = -t.c / det, t.a / det
    ys, xs = np.mgrid[0 : m.height, 0 : m.width]
    dx = xs - t.tx
    dy = ys - t.ty
    return _sample_nearest(m, ia * dx + ib * dy, ic * dx + id_ * dy)


def repos(m: ArgbMatrix, dx: int, dy: int) -> ArgbMatrix:
    """Shift content by (dx, dy) cells with zero fill: out(x, y) = in(x-dx, y-dy)."""
    dx, dy = int(dx), int(dy)
    out = np.zeros_like(m.planes)
    copy_w = m.width - abs(dx)
    copy_h = m.height - abs(dy)
    if copy_w > 0 and copy_h > 0:
        dst_x, src_x = max(dx, 0), max(-dx, 0)
        dst_y, src_y = max(dy, 0), max(-dy, 0)
        out[:, dst_y : dst_y + copy_h, dst_x : dst_x + copy_w] = m.planes[
            :, src_y : src_y + copy_h, src_x : src_x + copy_w
        ]
    return ArgbMatrix._adopt(out)


def scale_about_center(m: ArgbMatrix, sx: float, sy: float) -> ArgbMatrix:
    """Scale content by (sx, sy) about the matrix center, zero fill outside."""
    if sx <= 0 or sy <= 0:
        raise ValueError(f"scale factors must be positive, got ({sx}, {sy})")
    cx = (m.width - 1) / 2.0
    cy = (m.height - 1) / 2.0
    ys, xs = np.mgrid[0 : m.height, 0 : m.width]
    src_x = cx + (xs - cx) / sx
    src_y = cy + (ys - cy) / sy
    return _sample_nearest(m, src_x, src_y)
