"""IO and control plane: frame sources, WAV ingestion, recording, HTTP/WS service."""

from .sources import (
    CaptureAdapter,
    FrameSource,
    ImageSequenceSource,
    LiveCaptureSource,
    SyntheticSource,
    read_frame_sequence,
)
from .wav import WavFormatError, load_wav, read_wav
from .recorder import FrameRecorder, RecorderStoppedError, RecordingManifest
from .config import ConfigError, engine_config_from_dict, engine_config_to_dict, load_config
from .runtime import EngineSession, run_headless

__all__ = [
    "FrameSource",
    "SyntheticSource",
    "ImageSequenceSource",
    "CaptureAdapter",
    "LiveCaptureSource",
    "read_frame_sequence",
    "WavFormatError",
    "load_wav",
    "read_wav",
    "FrameRecorder",
    "RecorderStoppedError",
    "RecordingManifest",
    "ConfigError",
    "engine_config_to_dict",
    "engine_config_from_dict",
    "load_config",
    "EngineSession",
    "run_headless",
]
