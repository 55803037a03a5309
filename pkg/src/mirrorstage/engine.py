"""Per-frame stage routing: which visual treatment each progression level gets.

Level 1 shows the plain mirror, level 2 the burn, level 3 the dissolver, and
level 4 the solvent-split frame with the hand-tracked star. Progress is shown
through the red channel on the first three levels only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .audio import PitchReading, ProgressState, StabilityConfig, progress
from .effects import NoiseParams, StarParams, burn_stage, dissolve, fft_star, star_composite
from .geometry import mirror_y
from .matrix import ArgbMatrix, DimensionMismatchError, solvent_split, tint_progress
from .tracking import BoundingBox, ColorRange, find_bounds

FINAL_LEVEL = 4


class Stage(Enum):
    MIRROR_ONLY = "mirror-only"
    BURN = "burn"
    DISSOLVE = "dissolve"
    SOLVENT_STAR = "solvent-star"


_STAGE_BY_LEVEL = {1: Stage.MIRROR_ONLY, 2: Stage.BURN, 3: Stage.DISSOLVE, 4: Stage.SOLVENT_STAR}


@dataclass(frozen=True)
class EngineConfig:
    """Every live tunable in one place; nested groups mirror their subsystems."""

    frame_width: int = 320
    frame_height: int = 240
    target_fps: float = 15.0
    stability: StabilityConfig = field(default_factory=StabilityConfig)
    tracking_tolerance: int = 24
    noise: NoiseParams = field(default_factory=lambda: NoiseParams(seed=0))
    star: StarParams = field(default_factory=StarParams)
    level_override: Optional[int] = None

    def __post_init__(self):
        if self.frame_width < 1 or self.frame_height < 1:
            raise ValueError("frame dimensions must be positive")
        if self.target_fps <= 0:
            raise ValueError(f"target_fps must be positive, got {self.target_fps}")
        if not 0 <= self.tracking_tolerance <= 255:
            raise ValueError(
                f"tracking_tolerance {self.tracking_tolerance} outside [0, 255]"
            )
        if self.level_override is not None and not 1 <= self.level_override <= FINAL_LEVEL:
            raise ValueError(f"level_override {self.level_override} outside [1, {FINAL_LEVEL}]")


@dataclass(frozen=True)
class TelemetrySnapshot:
    """Per-frame readout for the control plane and UI."""

    frame_index: int
    level: int
    percent: float
    bbox: Optional[BoundingBox]
    pitch_hz: Optional[float]
    amplitude_rms: float
    timestamp_ms: float


def route(level: int) -> Stage:
    """Stage for a progression level; levels outside 1..4 are rejected."""
    stage = _STAGE_BY_LEVEL.get(level)
    if stage is None:
        raise ValueError(f"level {level} outside [1, {FINAL_LEVEL}]")
    return stage


def apply_override(cfg: EngineConfig, state: ProgressState) -> tuple[int, float]:
    """Effective (level, percent): the operator override wins when present."""
    if cfg.level_override is not None:
        if cfg.level_override < FINAL_LEVEL:
            return cfg.level_override, state.percent
        return FINAL_LEVEL, 100.0
    return progress(state)


def process_frame(
    frame: ArgbMatrix,
    progress_now: tuple[int, float],
    color_range: Optional[ColorRange],
    cfg: EngineConfig,
    *,
    frame_index: int = 0,
    timestamp_ms: float = 0.0,
    reading: Optional[PitchReading] = None,
) -> tuple[ArgbMatrix, TelemetrySnapshot]:
    """Mirror the frame, apply the level's stage, and report telemetry.

    Pure in all arguments: identical inputs give bitwise-identical frames.
    ``reading`` only annotates the snapshot; the audio side computes it.
    """
    if (frame.width, frame.height) != (cfg.frame_width, cfg.frame_height):
        raise DimensionMismatchError(
            f"frame {frame.width}x{frame.height} does not match configured "
            f"{cfg.frame_width}x{cfg.frame_height}"
        )
    level, percent = progress_now
    stage = route(level)
    if not 0.0 <= percent <= 100.0:
        raise ValueError(f"percent {percent} outside [0, 100]")

    mirrored = mirror_y(frame)
    bbox = find_bounds(mirrored, color_range) if color_range is not None else None

    if stage is Stage.MIRROR_ONLY:
        out = tint_progress(mirrored, percent)
    elif stage is Stage.BURN:
        out = tint_progress(burn_stage(mirrored, percent, cfg.noise, cfg.star), percent)
    elif stage is Stage.DISSOLVE:
        out = tint_progress(dissolve(mirrored, percent / 100.0), percent)
    else:
        base, _, _ = solvent_split(mirrored)
        out = star_composite(base, fft_star(mirrored, cfg.star), bbox, cfg.star)

    snapshot = TelemetrySnapshot(
        frame_index=frame_index,
        level=level,
        percent=percent,
        bbox=bbox,
        pitch_hz=None if reading is None else reading.pitch_hz,
        amplitude_rms=0.0 if reading is None else reading.amplitude_rms,
        timestamp_ms=timestamp_ms,
    )
    return out, snapshot
