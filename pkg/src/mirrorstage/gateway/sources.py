"""Frame sources: deterministic synthetic patterns, PNG sequences, live adapters.

Every source yields frames of constant dimensions for the whole session. Live
capture is abstracted behind an adapter so the engine never touches hardware.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Iterator, Optional, Protocol

import numpy as np

from ..matrix import ArgbMatrix
from .png import load_png

SYNTHETIC_PATTERNS = ("gradient", "gloves")


class FrameSource:
    """Base for anything that can stream constant-size frames."""

    width: int
    height: int
    fps: float

    def frames(self) -> Iterator[ArgbMatrix]:
        raise NotImplementedError


class SyntheticSource(FrameSource):
    """Procedural test patterns, a pure function of (pattern, seed, index).

    ``gradient`` is a plain color ramp; ``gloves`` is a dark scene with two
    bright magenta markers drifting apart and back, handy for tracking demos.
    """

    def __init__(
        self,
        pattern: str = "gradient",
        seed: int = 0,
        width: int = 320,
        height: int = 240,
        fps: float = 15.0,
        frame_count: Optional[int] = None,
    ):
        if pattern not in SYNTHETIC_PATTERNS:
            raise ValueError(
                f"unknown pattern {pattern!r}, expected one of {SYNTHETIC_PATTERNS}"
            )
        if width < 1 or height < 1:
            raise ValueError("width and height must be positive")
        self.pattern = pattern
        self.seed = int(seed)
        self.width = width
        self.height = height
        self.fps = fps
        self.frame_count = frame_count

    def frame(self, index: int) -> ArgbMatrix:
        if self.pattern == "gradient":
            return self._gradient(index)
        return self._gloves(index)

    def frames(self) -> Iterator[ArgbMatrix]:
        index = 0
        while self.frame_count is None or index < self.frame_count:
            yield self.frame(index)
            index += 1

    def _gradient(self, index: int) -> ArgbMatrix:
        w, h = self.width, self.height
        xs = np.linspace(0, 255, w).astype(np.uint8)
        ys = np.linspace(0, 255, h).astype(np.uint8)
        r = np.tile(xs, (h, 1))
        g = np.tile(ys[:, None], (1, w))
        b = np.full((h, w), (self.seed * 31 + index * 7) % 256, dtype=np.uint8)
        a = np.full((h, w), 255, dtype=np.uint8)
        return ArgbMatrix(np.stack([a, r, g, b]))

    def _gloves(self, index: int) -> ArgbMatrix:
        w, h = self.width, self.height
        planes = np.full((4, h, w), 40, dtype=np.uint8)
        planes[0].fill(255)
        size = max(2, w // 12)
        phase = 2.0 * math.pi * ((index + 17 * self.seed) % 120) / 120.0
        gap = int((w / 4.0) * (1.25 + math.sin(phase)) / 2.25) + size
        cy = h // 2
        for cx in (w // 2 - gap, w // 2 + gap):
            x0 = max(cx - size // 2, 0)
            x1 = min(cx + size // 2 + 1, w)
            y0 = max(cy - size // 2, 0)
            y1 = min(cy + size // 2 + 1, h)
            if x0 < x1 and y0 < y1:
                planes[1, y0:y1, x0:x1] = 255
                planes[2, y0:y1, x0:x1] = 0
                planes[3, y0:y1, x0:x1] = 255
        return ArgbMatrix(planes)


class ImageSequenceSource(FrameSource):
    """Zero-padded numbered PNG files played back in order at a fixed rate."""

    def __init__(self, directory: Path | str, fps: float):
        directory = Path(directory)
        if not directory.is_dir():
            raise FileNotFoundError(f"frame directory {directory} does not exist")
        if fps <= 0:
            raise ValueError(f"fps must be positive, got {fps}")
        self.directory = directory
        self.fps = fps
        self.paths = sorted(directory.glob("*.png"))
        if not self.paths:
            raise ValueError(f"frame directory {directory} contains no PNG files")
        first = self._load(self.paths[0])
        self.width = first.width
        self.height = first.height

    def _load(self, path: Path) -> ArgbMatrix:
        try:
            return load_png(path)
        except OSError as exc:
            raise ValueError(f"unreadable frame file {path}: {exc}") from exc

    def frames(self) -> Iterator[ArgbMatrix]:
        for path in self.paths:
            frame = self._load(path)
            if (frame.width, frame.height) != (self.width, self.height):
                raise ValueError(
                    f"inconsistent frame dimensions: {path} is "
                    f"{frame.width}x{frame.height}, expected {self.width}x{self.height}"
                )
            yield frame


def read_frame_sequence(directory: Path | str, fps: float) -> ImageSequenceSource:
    """Open a directory of numbered PNG frames as a source."""
    return ImageSequenceSource(directory, fps)


class CaptureAdapter(Protocol):
    """Anything that can produce live frames (camera, screen grab, ...)."""

    def frames(self) -> Iterator[ArgbMatrix]: ...


class LiveCaptureSource(FrameSource):
    """Wrap a capture adapter as a session source; no hardware code lives here."""

    def __init__(self, adapter: CaptureAdapter, width: int, height: int, fps: float):
        self.adapter = adapter
        self.width = width
        self.height = height
        self.fps = fps

    def frames(self) -> Iterator[ArgbMatrix]:
        for frame in self.adapter.frames():
            if (frame.width, frame.height) != (self.width, self.height):
                raise ValueError(
                    f"capture adapter produced {frame.width}x{frame.height}, "
                    f"expected {self.width}x{self.height}"
                )
            yield frame
