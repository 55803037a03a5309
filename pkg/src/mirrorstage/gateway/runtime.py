"""Session state and the headless runner.

The session is the synchronization point between the three clocks: the audio
tick (sole writer of progression state), the video clock (renders frames from
published state) and the control plane (config edits, color picks, overrides,
applied between frames). The headless runner replays a frame source and a WAV
on a simulated timeline, merging both clocks deterministically.
"""

from __future__ import annotations

import threading
from pathlib import Path
from typing import Callable, Optional

from ..audio import AudioFrame, PitchReading, ProgressState, estimate_pitch_amplitude, stability_step
from ..engine import EngineConfig, TelemetrySnapshot, apply_override, process_frame
from ..geometry import mirror_y
from ..matrix import ArgbMatrix
from ..tracking import ColorRange, pick_color
from .config import ConfigError, engine_config_from_dict
from .recorder import FrameRecorder, RecordingManifest
from .sources import FrameSource
from .wav import read_wav


class EngineSession:
    """Live engine state shared by the clocks and the control plane."""

    def __init__(self, cfg: EngineConfig, recorder: Optional[FrameRecorder] = None):
        self._lock = threading.RLock()
        self._cfg = cfg
        self._state = ProgressState()
        self._color_range: Optional[ColorRange] = None
        self._last_reading: Optional[PitchReading] = None
        self._latest_mirrored: Optional[ArgbMatrix] = None
        self._latest_output: Optional[ArgbMatrix] = None
        self._frame_index = 0
        self._recorder = recorder
        self._latest_snapshot = TelemetrySnapshot(
            frame_index=0,
            level=1,
            percent=0.0,
            bbox=None,
            pitch_hz=None,
            amplitude_rms=0.0,
            timestamp_ms=0.0,
        )

    @property
    def config(self) -> EngineConfig:
        with self._lock:
            return self._cfg

    @property
    def snapshot(self) -> TelemetrySnapshot:
        with self._lock:
            return self._latest_snapshot

    @property
    def color_range(self) -> Optional[ColorRange]:
        with self._lock:
            return self._color_range

    @property
    def recorder(self) -> Optional[FrameRecorder]:
        return self._recorder

    def update_config(self, patch: dict) -> EngineConfig:
        """Apply a (partial) config document; takes effect at the next frame."""
        with self._lock:
            cfg = engine_config_from_dict(patch, base=self._cfg)
            if (cfg.frame_width, cfg.frame_height) != (
                self._cfg.frame_width,
                self._cfg.frame_height,
            ):
                raise ConfigError("frame dimensions are fixed for a running session")
            self._cfg = cfg
            return cfg

    def set_override(self, level: Optional[int]) -> None:
        with self._lock:
            self._cfg = engine_config_from_dict({"level_override": level}, base=self._cfg)

    def pick(self, x: int, y: int) -> ColorRange:
        """Sample the latest mirrored frame and install the tracked color."""
        with self._lock:
            if self._latest_mirrored is None:
                raise RuntimeError("no frame available yet")
            picked = pick_color(self._latest_mirrored, x, y, self._cfg.tracking_tolerance)
            self._color_range = picked
            return picked

    def audio_tick(self, frame: AudioFrame, now_ms: float) -> PitchReading:
        """Feed one analysis window; the audio clock is the sole state writer."""
        with self._lock:
            reading = estimate_pitch_amplitude(frame, self._cfg.stability.silence_rms)
            self._state = stability_step(self._state, reading, now_ms, self._cfg.stability)
            self._last_reading = reading
            return reading

    def render(self, frame: ArgbMatrix, now_ms: float) -> tuple[ArgbMatrix, TelemetrySnapshot]:
        """Process one video frame against the latest published progression."""
        with self._lock:
            cfg = self._cfg
            progress_now = apply_override(cfg, self._state)
            color_range = self._color_range
            reading = self._last_reading
            index = self._frame_index
        out, snap = process_frame(
            frame,
            progress_now,
            color_range,
            cfg,
            frame_index=index,
            timestamp_ms=now_ms,
            reading=reading,
        )
        with self._lock:
            self._latest_mirrored = mirror_y(frame)
            self._latest_output = out
            self._latest_snapshot = snap
            self._frame_index = index + 1
            if self._recorder is not None and not self._recorder.stopped:
                self._recorder.write(out)
        return out, snap

    def stop_recording(self) -> RecordingManifest:
        with self._lock:
            if self._recorder is None:
                raise RuntimeError("session is not recording")
            return self._recorder.stop()


def run_headless(
    cfg: EngineConfig,
    source: FrameSource,
    wav_path: Optional[Path | str] = None,
    *,
    max_frames: Optional[int] = None,
    recorder: Optional[FrameRecorder] = None,
    on_frame: Optional[Callable[[TelemetrySnapshot], None]] = None,
) -> list[TelemetrySnapshot]:
    """Drive a full session on a simulated clock; returns one snapshot per frame.

    Audio ticks and video frames are merged in timestamp order (audio first on
    ties), so a given source + WAV + config always replays identically. The
    run ends when the WAV is exhausted (when given), the source runs dry, or
    ``max_frames`` is reached.
    """
    session = EngineSession(cfg, recorder=recorder)
    frame_period_ms = 1000.0 / cfg.target_fps

    audio_events = []
    if wav_path is not None:
        audio_events = list(read_wav(wav_path, interval_ms=cfg.stability.interval_ms))
    horizon_ms = audio_events[-1][0] if audio_events else None

    snapshots: list[TelemetrySnapshot] = []
    frame_iter = source.frames()
    audio_pos = 0
    frame_no = 0
    while True:
        if max_frames is not None and frame_no >= max_frames:
            break
        frame_time = frame_no * frame_period_ms
        if horizon_ms is not None and frame_time > horizon_ms:
            break
        while audio_pos < len(audio_events) and audio_events[audio_pos][0] <= frame_time:
            tick_ms, window = audio_events[audio_pos]
            session.audio_tick(window, tick_ms)
            audio_pos += 1
        try:
            frame = next(frame_iter)
        except StopIteration:
            break
        _, snap = session.render(frame, frame_time)
        snapshots.append(snap)
        if on_frame is not None:
            on_frame(snap)
        frame_no += 1
    return snapshots
