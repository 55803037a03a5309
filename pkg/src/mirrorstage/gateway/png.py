"""Lossless PNG round-tripping for ARGB matrices."""

from __future__ import annotations

from pathlib import Path

import numpy as np
from PIL import Image

from ..matrix import ArgbMatrix


def save_png(m: ArgbMatrix, path: Path | str) -> None:
    rgba = np.ascontiguousarray(np.stack([m.r, m.g, m.b, m.a], axis=-1))
    Image.fromarray(rgba, mode="RGBA").save(path, format="PNG")


def load_png(path: Path | str) -> ArgbMatrix:
    with Image.open(path) as img:
        rgba = np.asarray(img.convert("RGBA"), dtype=np.uint8)
    r, g, b, a = np.moveaxis(rgba, -1, 0)
    return ArgbMatrix(np.stack([a, r, g, b]))
