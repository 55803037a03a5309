"""Pitch/amplitude estimation and the sound-stability progression machine.

A performer advances through four levels by holding a homogeneous sound.
Readings are taken on a fixed tick (200 ms by default); a reading whose pitch
or amplitude moves too far from the previous one restarts the stability timer,
and holding steady for the configured duration bumps the level. Levels never
go back down within a session.

The estimator is a Hann-windowed 2048-point FFT peak picker refined with
3-point parabolic interpolation on log magnitudes. It is deliberately simple:
stability, not absolute pitch, is what drives progression, so occasional
octave errors are acceptable as long as they are consistent.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

WINDOW_SIZE = 2048
FINAL_LEVEL = 4
DEFAULT_SILENCE_RMS = 0.01

_HANN = np.hanning(WINDOW_SIZE)
_AMP_EPSILON = 1e-9


class FrameTooShortError(ValueError):
    """The audio frame does not cover one analysis window."""


class AudioFrame:
    """A mono chunk of samples in [-1, 1] at a fixed sample rate."""

    __slots__ = ("samples", "sample_rate")

    def __init__(self, samples, sample_rate: int):
        arr = np.ascontiguousarray(samples, dtype=np.float64)
        if arr.ndim != 1:
            raise ValueError(f"samples must be 1-dimensional, got shape {arr.shape}")
        if int(sample_rate) <= 0:
            raise ValueError(f"sample_rate must be positive, got {sample_rate}")
        arr.setflags(write=False)
        self.samples = arr
        self.sample_rate = int(sample_rate)

    def __len__(self) -> int:
        return self.samples.shape[0]


@dataclass(frozen=True)
class PitchReading:
    """One instantaneous reading; pitch is absent below the silence threshold."""

    pitch_hz: Optional[float]
    amplitude_rms: float


@dataclass(frozen=True)
class StabilityConfig:
    interval_ms: float = 200.0
    rel_pitch_tol: float = 0.06
    rel_amp_tol: float = 0.25
    level_durations_ms: tuple[float, float, float] = (5000.0, 8000.0, 12000.0)
    silence_rms: float = DEFAULT_SILENCE_RMS

    def __post_init__(self):
        durations = tuple(float(d) for d in self.level_durations_ms)
        if len(durations) != 3:
            raise ValueError("level_durations_ms must have exactly 3 entries")
        object.__setattr__(self, "level_durations_ms", durations)
        for name in ("interval_ms", "rel_pitch_tol", "rel_amp_tol", "silence_rms"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if any(d <= 0 for d in durations):
            raise ValueError("level durations must be positive")


@dataclass(frozen=True)
class ProgressState:
    """Progression snapshot: current level, percent toward the next, timer anchors.

    ``last_tick_ms`` is bookkeeping for the strictly-increasing-timestamp
    contract and plays no part in the progression rules.
    """

    level: int = 1
    percent: float = 0.0
    stable_since_ms: Optional[float] = None
    last_reading: Optional[PitchReading] = None
    last_tick_ms: Optional[float] = field(default=None, compare=False)

    def __post_init__(self):
        if not 1 <= self.level <= FINAL_LEVEL:
            raise ValueError(f"level {self.level} outside [1, {FINAL_LEVEL}]")
        if not 0.0 <= self.percent <= 100.0:
            raise ValueError(f"percent {self.percent} outside [0, 100]")
        if self.level == FINAL_LEVEL and self.percent != 100.0:
            raise ValueError("terminal level must report 100 percent")


def estimate_pitch_amplitude(
    frame: AudioFrame, silence_rms: float = DEFAULT_SILENCE_RMS
) -> PitchReading:
    """RMS amplitude plus FFT-peak pitch of the most recent analysis window.

    Pitch comes from the maximum-magnitude bin of a Hann-windowed 2048-point
    FFT, refined by fitting a parabola through the log magnitudes of the peak
    and its neighbors. Below ``silence_rms`` the pitch is absent.
    """
    if len(frame) < WINDOW_SIZE:
        raise FrameTooShortError(
            f"frame has {len(frame)} samples, analysis needs {WINDOW_SIZE}"
        )
    window = frame.samples[-WINDOW_SIZE:]
    rms = float(np.sqrt(np.mean(window * window)))
    if rms < silence_rms:
        return PitchReading(pitch_hz=None, amplitude_rms=rms)

    spectrum = np.abs(np.fft.rfft(window * _HANN))
    # Skip the DC bin; a leaky mean must never win the peak search.
    peak = int(np.argmax(spectrum[1:])) + 1
    delta = 0.0
    if 1 <= peak - 1 and peak + 1 < spectrum.shape[0]:
        lm1, l0, lp1 = np.log(np.maximum(spectrum[peak - 1 : peak + 2], 1e-30))
        denom = lm1 - 2.0 * l0 + lp1
        if denom != 0.0:
            delta = float(np.clip(0.5 * (lm1 - lp1) / denom, -0.5, 0.5))
    pitch = (peak + delta) * frame.sample_rate / WINDOW_SIZE
    return PitchReading(pitch_hz=float(pitch), amplitude_rms=rms)


def stability_step(
    state: ProgressState, reading: PitchReading, now_ms: float, cfg: StabilityConfig
) -> ProgressState:
    """Advance the progression machine by one reading taken at ``now_ms``.

    Silence or an out-of-tolerance fluctuation restarts the timer and zeroes
    the percent; an in-tolerance reading accrues stable time; enough stable
    time bumps the level. The first voiced reading after a restart only seeds
    the comparison baseline. Levels never decrease.
    """
    if state.last_tick_ms is not None and now_ms <= state.last_tick_ms:
        raise ValueError(
            f"timestamps must be strictly increasing: {now_ms} after {state.last_tick_ms}"
        )
    if state.level >= FINAL_LEVEL:
        return replace(state, last_reading=reading, last_tick_ms=now_ms)

    if reading.pitch_hz is None:
        return replace(
            state,
            percent=0.0,
            stable_since_ms=now_ms,
            last_reading=None,
            last_tick_ms=now_ms,
        )

    prev = state.last_reading
    if prev is None or prev.pitch_hz is None or state.stable_since_ms is None:
        return replace(
            state,
            percent=0.0,
            stable_since_ms=now_ms,
            last_reading=reading,
            last_tick_ms=now_ms,
        )

    pitch_jump = abs(reading.pitch_hz - prev.pitch_hz) / prev.pitch_hz
    amp_jump = abs(reading.amplitude_rms - prev.amplitude_rms) / max(
        prev.amplitude_rms, _AMP_EPSILON
    )
    if pitch_jump > cfg.rel_pitch_tol or amp_jump > cfg.rel_amp_tol:
        return replace(
            state,
            percent=0.0,
            stable_since_ms=now_ms,
            last_reading=reading,
            last_tick_ms=now_ms,
        )

    duration = now_ms - state.stable_since_ms
    required = cfg.level_durations_ms[state.level - 1]
    if duration >= required:
        new_level = state.level + 1
        return ProgressState(
            level=new_level,
            percent=100.0 if new_level == FINAL_LEVEL else 0.0,
            stable_since_ms=now_ms,
            last_reading=reading,
            last_tick_ms=now_ms,
        )
    return replace(
        state,
        percent=min(100.0, 100.0 * duration / required),
        last_reading=reading,
        last_tick_ms=now_ms,
    )


def progress(state: ProgressState) -> tuple[int, float]:
    """Project the state to its two public outputs: (level, percent)."""
    return state.level, state.percent
