"""WAV ingestion: PCM decode plus analysis windows cut on the sampling tick.

Hand-rolled RIFF parsing keeps the error contract tight: anything that is not
16-bit integer or 32-bit float PCM is an unsupported encoding, and a data
chunk shorter than declared is a truncated file.
"""

from __future__ import annotations

import struct
from pathlib import Path
from typing import Iterator

import numpy as np

from ..audio import WINDOW_SIZE, AudioFrame


class WavFormatError(ValueError):
    """The file is not a WAV this reader supports, or is damaged."""


def load_wav(path: Path | str) -> tuple[np.ndarray, int]:
    """Decode a mono or stereo PCM WAV to normalized float samples in [-1, 1].

    Stereo is averaged down to mono. Returns (samples, sample_rate).
    """
    data = Path(path).read_bytes()
    if len(data) < 12 or data[0:4] != b"RIFF" or data[8:12] != b"WAVE":
        raise WavFormatError(f"{path}: not a RIFF/WAVE file")

    fmt = None
    payload = None
    pos = 12
    while pos + 8 <= len(data):
        chunk_id = data[pos : pos + 4]
        (size,) = struct.unpack_from("<I", data, pos + 4)
        body = data[pos + 8 : pos + 8 + size]
        if len(body) < size:
            raise WavFormatError(
                f"{path}: truncated file, chunk {chunk_id!r} declares {size} bytes "
                f"but only {len(body)} remain"
            )
        if chunk_id == b"fmt ":
            if size < 16:
                raise WavFormatError(f"{path}: malformed fmt chunk")
            fmt = struct.unpack_from("<HHIIHH", body, 0)
        elif chunk_id == b"data":
            payload = body
        pos += 8 + size + (size & 1)

    if fmt is None or payload is None:
        raise WavFormatError(f"{path}: missing fmt or data chunk")
    audio_format, channels, sample_rate, _, _, bits = fmt
    if channels < 1:
        raise WavFormatError(f"{path}: invalid channel count {channels}")

    if (audio_format, bits) == (1, 16):
        raw = np.frombuffer(payload[: len(payload) - len(payload) % 2], dtype="<i2")
        samples = raw.astype(np.float64) / 32768.0
    elif (audio_format, bits) == (3, 32):
        raw = np.frombuffer(payload[: len(payload) - len(payload) % 4], dtype="<f4")
        samples = raw.astype(np.float64)
    else:
        raise WavFormatError(
            f"{path}: unsupported encoding (format {audio_format}, {bits}-bit); "
            "only 16-bit PCM and 32-bit float are supported"
        )

    if samples.size % channels != 0:
        raise WavFormatError(f"{path}: truncated file, partial sample frame in data chunk")
    if channels > 1:
        samples = samples.reshape(-1, channels).mean(axis=1)
    return np.clip(samples, -1.0, 1.0), int(sample_rate)


def read_wav(
    path: Path | str, interval_ms: float = 200.0, window: int = WINDOW_SIZE
) -> Iterator[tuple[float, AudioFrame]]:
    """Yield (tick_ms, AudioFrame) analysis windows at each sampling tick.

    Tick k sits at k * interval_ms; its window is the most recent ``window``
    samples ending at that position. Ticks before one full window are skipped.
    """
    if interval_ms <= 0:
        raise ValueError(f"interval_ms must be positive, got {interval_ms}")
    samples, sample_rate = load_wav(path)
    tick = 1
    while True:
        now_ms = tick * interval_ms
        end = round(now_ms * sample_rate / 1000.0)
        if end > samples.size:
            return
        if end >= window:
            yield now_ms, AudioFrame(samples[end - window : end], sample_rate)
        tick += 1
