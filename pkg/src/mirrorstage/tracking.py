"""Color-range blob tracking: pick a target color, box the cells that match.

Both gloves share one picked color, so the box spans both hands and its width
encodes how far apart they are. Alpha carries no chromatic information and is
excluded from matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .matrix import ArgbMatrix


@dataclass(frozen=True)
class ColorRange:
    """Inclusive per-channel match window over R, G, B."""

    min_r: int
    min_g: int
    min_b: int
    max_r: int
    max_g: int
    max_b: int

    def __post_init__(self):
        for name in ("r", "g", "b"):
            lo = getattr(self, f"min_{name}")
            hi = getattr(self, f"max_{name}")
            if not (0 <= lo <= 255 and 0 <= hi <= 255):
                raise ValueError(f"channel {name} bounds ({lo}, {hi}) outside [0, 255]")
            if lo > hi:
                raise ValueError(f"channel {name} has min {lo} > max {hi}")


@dataclass(frozen=True)
class BoundingBox:
    """Minimal axis-aligned box of matching cells.

    ``width``/``height`` are extents (max - min), not cell counts, and the
    center may be half-integral.
    """

    min_x: int
    min_y: int
    max_x: int
    max_y: int
    center_x: float
    center_y: float
    width: float
    height: float

    def __post_init__(self):
        if self.min_x > self.max_x or self.min_y > self.max_y:
            raise ValueError("box min must not exceed max")
        if (
            self.center_x != (self.min_x + self.max_x) / 2.0
            or self.center_y != (self.min_y + self.max_y) / 2.0
            or self.width != float(self.max_x - self.min_x)
            or self.height != float(self.max_y - self.min_y)
        ):
            raise ValueError("derived box fields are inconsistent with the extent")

    @classmethod
    def from_extent(cls, min_x: int, min_y: int, max_x: int, max_y: int) -> "BoundingBox":
        return cls(
            min_x=int(min_x),
            min_y=int(min_y),
            max_x=int(max_x),
            max_y=int(max_y),
            center_x=(min_x + max_x) / 2.0,
            center_y=(min_y + max_y) / 2.0,
            width=float(max_x - min_x),
            height=float(max_y - min_y),
        )


def pick_color(m: ArgbMatrix, x: int, y: int, tolerance: int) -> ColorRange:
    """Build a match window of +-tolerance around the R, G, B values at (x, y)."""
    if not 0 <= tolerance <= 255:
        raise ValueError(f"tolerance {tolerance} outside [0, 255]")
    if not (0 <= x < m.width and 0 <= y < m.height):
        raise ValueError(f"coordinate ({x}, {y}) outside {m.width}x{m.height} frame")
    _, r, g, b = m.cell(x, y)
    return ColorRange(
        min_r=max(r - tolerance, 0),
        min_g=max(g - tolerance, 0),
        min_b=max(b - tolerance, 0),
        max_r=min(r + tolerance, 255),
        max_g=min(g + tolerance, 255),
        max_b=min(b + tolerance, 255),
    )


def find_bounds(m: ArgbMatrix, color_range: ColorRange) -> Optional[BoundingBox]:
    """Minimal box over cells whose R, G and B all fall inside the range.

    Returns None when nothing matches; absence is a value, not an error.
    """
    r, g, b = m.r, m.g, m.b
    mask = (
        (r >= color_range.min_r)
        & (r <= color_range.max_r)
        & (g >= color_range.min_g)
        & (g <= color_range.max_g)
        & (b >= color_range.min_b)
        & (b <= color_range.max_b)
    )
    ys, xs = np.nonzero(mask)
    if xs.size == 0:
        return None
    return BoundingBox.from_extent(int(xs.min()), int(ys.min()), int(xs.max()), int(ys.max()))


def draw_outline(m: ArgbMatrix, box: BoundingBox) -> ArgbMatrix:
    """Copy of ``m`` with a 1-cell full-intensity green rectangle on the box perimeter."""
    if not (0 <= box.min_x and box.max_x < m.width and 0 <= box.min_y and box.max_y < m.height):
        raise ValueError(
            f"box ({box.min_x}, {box.min_y})-({box.max_x}, {box.max_y}) "
            f"outside {m.width}x{m.height} matrix"
        )
    planes = m.planes.copy()
    x0, x1, y0, y1 = box.min_x, box.max_x, box.min_y, box.max_y
    # Perimeter cells become (A=255, R=0, G=255, B=0).
    for rows, cols in (((y0, y1), slice(x0, x1 + 1)), (slice(y0, y1 + 1), (x0, x1))):
        planes[0][rows, cols] = 255
        planes[1][rows, cols] = 0
        planes[2][rows, cols] = 255
        planes[3][rows, cols] = 0
    return ArgbMatrix._adopt(planes)
