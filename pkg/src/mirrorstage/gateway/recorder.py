"""Session recorder: numbered PNG frames plus a JSON manifest.

Recording starts with the session and runs until stopped; writes after the
stop are rejected. Frame sequences keep the round trip bit-exact, so a
recorded session re-reads into identical matrices.
"""

from __future__ import annotations

import json
import uuid
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from ..matrix import ArgbMatrix
from .png import save_png

MANIFEST_NAME = "manifest.json"


class RecorderStoppedError(RuntimeError):
    """The recording was already finalized."""


@dataclass(frozen=True)
class RecordingManifest:
    session_id: str
    frame_count: int
    fps: float
    width: int
    height: int
    started_at: str
    stopped_at: Optional[str]

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "RecordingManifest":
        return cls(**data)


def _utc_now() -> str:
    return datetime.now(timezone.utc).replace(microsecond=0).isoformat()


class FrameRecorder:
    """Writes frames as ``frame_NNNNNN.png`` under one session directory."""

    def __init__(
        self,
        directory: Path | str,
        fps: float,
        width: int,
        height: int,
        session_id: Optional[str] = None,
    ):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self.fps = fps
        self.width = width
        self.height = height
        self.session_id = session_id or uuid.uuid4().hex[:12]
        self.started_at = _utc_now()
        self._count = 0
        self._stopped = False

    @property
    def frame_count(self) -> int:
        return self._count

    @property
    def stopped(self) -> bool:
        return self._stopped

    def write(self, frame: ArgbMatrix) -> None:
        if self._stopped:
            raise RecorderStoppedError("cannot write: recording already stopped")
        if (frame.width, frame.height) != (self.width, self.height):
            raise ValueError(
                f"frame {frame.width}x{frame.height} does not match recording "
                f"{self.width}x{self.height}"
            )
        save_png(frame, self.directory / f"frame_{self._count:06d}.png")
        self._count += 1

    def stop(self) -> RecordingManifest:
        if self._stopped:
            raise RecorderStoppedError("recording already stopped")
        self._stopped = True
        manifest = RecordingManifest(
            session_id=self.session_id,
            frame_count=self._count,
            fps=self.fps,
            width=self.width,
            height=self.height,
            started_at=self.started_at,
            stopped_at=_utc_now(),
        )
        (self.directory / MANIFEST_NAME).write_text(json.dumps(manifest.to_dict(), indent=2))
        return manifest
