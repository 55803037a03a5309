"""HTTP/WS control plane and live streams around an engine session.

Frames go out on ``/frames`` as binary messages: a 16-byte header (magic
``AMF1``, then width, height and frame index as little-endian u32) followed by
width*height*4 bytes of RGBA. Telemetry goes out on ``/telemetry`` as one JSON
object per frame. Slow stream clients get the latest frame, never a backlog.
"""

from __future__ import annotations

import asyncio
import dataclasses
import json
import logging
import socket
import struct
import threading
import time
from pathlib import Path
from typing import Optional

import numpy as np
from aiohttp import WSMsgType, web

from ..engine import EngineConfig, TelemetrySnapshot
from ..matrix import ArgbMatrix
from ..tracking import ColorRange
from .config import ConfigError, engine_config_to_dict
from .recorder import FrameRecorder, RecorderStoppedError
from .runtime import EngineSession
from .sources import FrameSource
from .wav import read_wav

logger = logging.getLogger("mirrorstage.gateway")

FRAME_MAGIC = b"AMF1"


def encode_frame(m: ArgbMatrix, frame_index: int) -> bytes:
    """Binary wire format: AMF1 header + RGBA bytes, row-major."""
    header = FRAME_MAGIC + struct.pack("<III", m.width, m.height, frame_index)
    rgba = np.ascontiguousarray(np.stack([m.r, m.g, m.b, m.a], axis=-1))
    return header + rgba.tobytes()


def snapshot_to_dict(snap: TelemetrySnapshot) -> dict:
    data = dataclasses.asdict(snap)
    if snap.bbox is not None:
        data["bbox"] = dataclasses.asdict(snap.bbox)
    return data


def color_range_to_dict(cr: ColorRange) -> dict:
    return dataclasses.asdict(cr)


class _Broadcaster:
    """Latest-wins fan-out from the video thread into websocket handlers."""

    def __init__(self, loop: asyncio.AbstractEventLoop):
        self._loop = loop
        self._queues: set[asyncio.Queue] = set()

    def subscribe(self) -> asyncio.Queue:
        queue: asyncio.Queue = asyncio.Queue(maxsize=1)
        self._queues.add(queue)
        return queue

    def unsubscribe(self, queue: asyncio.Queue) -> None:
        self._queues.discard(queue)

    def publish_threadsafe(self, item) -> None:
        self._loop.call_soon_threadsafe(self._offer, item)

    def _offer(self, item) -> None:
        for queue in list(self._queues):
            if queue.full():
                try:
                    queue.get_nowait()
                except asyncio.QueueEmpty:
                    pass
            queue.put_nowait(item)


def _error(status: int, message: str) -> web.Response:
    return web.json_response({"error": message}, status=status)


def create_app(service: "MirrorService") -> web.Application:
    app = web.Application()
    session = service.session

    async def index(_request):
        if service.static_dir is not None:
            page = service.static_dir / "index.html"
            if page.is_file():
                return web.FileResponse(page)
        return web.Response(
            text=(
                "mirrorstage gateway\n\n"
                "GET  /state\nGET  /config\nPOST /config\nPOST /pick {x, y}\n"
                "POST /override {level}\nPOST /record/stop\nWS   /frames\nWS   /telemetry\n"
            ),
            content_type="text/plain",
        )

    async def get_state(_request):
        return web.json_response(snapshot_to_dict(session.snapshot))

    async def get_config(_request):
        return web.json_response(engine_config_to_dict(session.config))

    async def post_config(request):
        try:
            patch = await request.json()
        except json.JSONDecodeError:
            return _error(400, "request body must be JSON")
        try:
            cfg = session.update_config(patch)
        except ConfigError as exc:
            return _error(400, str(exc))
        return web.json_response(engine_config_to_dict(cfg))

    async def post_pick(request):
        try:
            body = await request.json()
        except json.JSONDecodeError:
            return _error(400, "request body must be JSON")
        if not isinstance(body, dict) or not {"x", "y"} <= set(body):
            return _error(400, "expected {x, y}")
        try:
            x, y = int(body["x"]), int(body["y"])
        except (TypeError, ValueError):
            return _error(400, "x and y must be integers")
        try:
            picked = session.pick(x, y)
        except RuntimeError as exc:
            return _error(409, str(exc))
        except ValueError as exc:
            return _error(400, str(exc))
        return web.json_response(color_range_to_dict(picked))

    async def post_override(request):
        try:
            body = await request.json()
        except json.JSONDecodeError:
            return _error(400, "request body must be JSON")
        if not isinstance(body, dict) or "level" not in body:
            return _error(400, "expected {level}")
        try:
            session.set_override(body["level"])
        except ConfigError as exc:
            return _error(400, str(exc))
        return web.json_response({"level": session.config.level_override})

    async def post_record_stop(_request):
        try:
            manifest = session.stop_recording()
        except RecorderStoppedError as exc:
            return _error(409, str(exc))
        except RuntimeError as exc:
            return _error(409, str(exc))
        return web.json_response(manifest.to_dict())

    async def ws_stream(request, broadcaster, binary: bool):
        ws = web.WebSocketResponse()
        await ws.prepare(request)
        queue = broadcaster.subscribe()
        try:
            while not ws.closed:
                getter = asyncio.ensure_future(queue.get())
                receiver = asyncio.ensure_future(ws.receive())
                done, pending = await asyncio.wait(
                    {getter, receiver}, return_when=asyncio.FIRST_COMPLETED
                )
                for task in pending:
                    task.cancel()
                if receiver in done:
                    msg = receiver.result()
                    if msg.type in (WSMsgType.CLOSE, WSMsgType.CLOSING, WSMsgType.ERROR):
                        break
                if getter in done:
                    item = getter.result()
                    if binary:
                        await ws.send_bytes(item)
                    else:
                        await ws.send_json(item)
        finally:
            broadcaster.unsubscribe(queue)
            await ws.close()
        return ws

    async def ws_frames(request):
        return await ws_stream(request, service.frames_bus, binary=True)

    async def ws_telemetry(request):
        return await ws_stream(request, service.telemetry_bus, binary=False)

    app.router.add_get("/", index)
    app.router.add_get("/state", get_state)
    app.router.add_get("/config", get_config)
    app.router.add_post("/config", post_config)
    app.router.add_post("/pick", post_pick)
    app.router.add_post("/override", post_override)
    app.router.add_post("/record/stop", post_record_stop)
    app.router.add_get("/frames", ws_frames)
    app.router.add_get("/telemetry", ws_telemetry)
    if service.static_dir is not None and service.static_dir.is_dir():
        app.router.add_static("/ui", service.static_dir)
    return app


class MirrorService:
    """Owns the engine threads and the HTTP/WS endpoint for one session."""

    def __init__(
        self,
        cfg: EngineConfig,
        source: FrameSource,
        wav_path: Optional[Path | str] = None,
        *,
        host: str = "127.0.0.1",
        port: int = 0,
        record_dir: Optional[Path | str] = None,
        static_dir: Optional[Path | str] = None,
        realtime: bool = True,
    ):
        recorder = None
        if record_dir is not None:
            recorder = FrameRecorder(
                record_dir, cfg.target_fps, cfg.frame_width, cfg.frame_height
            )
        self.cfg = cfg
        self.source = source
        self.wav_path = wav_path
        self.session = EngineSession(cfg, recorder=recorder)
        self.host = host
        self.port = port
        self.static_dir = Path(static_dir) if static_dir is not None else None
        self.realtime = realtime
        self.frames_bus: Optional[_Broadcaster] = None
        self.telemetry_bus: Optional[_Broadcaster] = None
        self._loop: Optional[asyncio.AbstractEventLoop] = None
        self._loop_thread: Optional[threading.Thread] = None
        self._video_thread: Optional[threading.Thread] = None
        self._audio_thread: Optional[threading.Thread] = None
        self._stop = threading.Event()
        self._ready = threading.Event()
        self._runner: Optional[web.AppRunner] = None

    def start(self) -> "MirrorService":
        self._loop_thread = threading.Thread(target=self._run_loop, daemon=True)
        self._loop_thread.start()
        if not self._ready.wait(timeout=10):
            raise RuntimeError("service failed to start")
        self._video_thread = threading.Thread(target=self._video_main, daemon=True)
        self._video_thread.start()
        if self.wav_path is not None:
            self._audio_thread = threading.Thread(target=self._audio_main, daemon=True)
            self._audio_thread.start()
        return self

    def _run_loop(self) -> None:
        loop = asyncio.new_event_loop()
        asyncio.set_event_loop(loop)
        self._loop = loop
        self.frames_bus = _Broadcaster(loop)
        self.telemetry_bus = _Broadcaster(loop)

        async def boot():
            app = create_app(self)
            self._runner = web.AppRunner(app)
            await self._runner.setup()
            sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
            sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
            sock.bind((self.host, self.port))
            self.port = sock.getsockname()[1]
            site = web.SockSite(self._runner, sock)
            await site.start()

        loop.run_until_complete(boot())
        self._ready.set()
        loop.run_forever()
        loop.run_until_complete(self._runner.cleanup())
        loop.close()

    def _video_main(self) -> None:
        period = 1.0 / self.cfg.target_fps
        start = time.monotonic()
        frame_no = 0
        try:
            for frame in self.source.frames():
                if self._stop.is_set():
                    break
                now_ms = (time.monotonic() - start) * 1000.0
                out, snap = self.session.render(frame, now_ms)
                if self.frames_bus is not None:
                    self.frames_bus.publish_threadsafe(encode_frame(out, snap.frame_index))
                if self.telemetry_bus is not None:
                    self.telemetry_bus.publish_threadsafe(snapshot_to_dict(snap))
                frame_no += 1
                if self.realtime:
                    next_at = start + frame_no * period
                    delay = next_at - time.monotonic()
                    if delay > 0:
                        time.sleep(delay)
        except Exception:  # pragma: no cover - defensive thread guard
            logger.exception("video thread stopped on error")

    def _audio_main(self) -> None:
        start = time.monotonic()
        try:
            for tick_ms, window in read_wav(
                self.wav_path, interval_ms=self.cfg.stability.interval_ms
            ):
                if self._stop.is_set():
                    break
                self.session.audio_tick(window, tick_ms)
                if self.realtime:
                    delay = start + tick_ms / 1000.0 - time.monotonic()
                    if delay > 0:
                        time.sleep(delay)
        except Exception:  # pragma: no cover - defensive thread guard
            logger.exception("audio thread stopped on error")

    def stop(self) -> None:
        self._stop.set()
        for thread in (self._video_thread, self._audio_thread):
            if thread is not None:
                thread.join(timeout=5)
        recorder = self.session.recorder
        if recorder is not None and not recorder.stopped:
            recorder.stop()
        if self._loop is not None:
            self._loop.call_soon_threadsafe(self._loop.stop)
        if self._loop_thread is not None:
            self._loop_thread.join(timeout=5)
