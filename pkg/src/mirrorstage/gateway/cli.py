"""Command line entry point: run a mirror session against file or synthetic inputs."""

from __future__ import annotations

import logging
from pathlib import Path

import click

from ..engine import EngineConfig
from .config import load_config
from .recorder import FrameRecorder
from .runtime import run_headless
from .service import MirrorService
from .sources import SYNTHETIC_PATTERNS, SyntheticSource, read_frame_sequence

logger = logging.getLogger("mirrorstage.cli")


def _default_static_dir() -> Path | None:
    # Serve the operator console when a built frontend sits next to the package.
    for candidate in (
        Path(__file__).resolve().parents[3] / "frontend" / "dist",
        Path.cwd() / "frontend" / "dist",
    ):
        if (candidate / "index.html").is_file():
            return candidate
    return None


@click.group()
def main():
    """Audio-driven video mirror engine."""
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")


@main.command()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--video-dir", type=click.Path(exists=True, file_okay=False))
@click.option("--synthetic", "pattern", type=click.Choice(SYNTHETIC_PATTERNS))
@click.option("--wav", "wav_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--port", default=8787, show_default=True)
@click.option("--record-dir", type=click.Path(file_okay=False))
@click.option("--headless", is_flag=True, help="Run without the HTTP service.")
def run(config_path, video_dir, pattern, wav_path, port, record_dir, headless):
    """Run the engine on a video directory or a synthetic pattern."""
    if video_dir and pattern:
        raise click.UsageError("--video-dir and --synthetic are mutually exclusive")
    cfg = load_config(config_path) if config_path else EngineConfig()

    if video_dir:
        source = read_frame_sequence(video_dir, cfg.target_fps)
        if (source.width, source.height) != (cfg.frame_width, cfg.frame_height):
            raise click.UsageError(
                f"frame directory is {source.width}x{source.height} but the config "
                f"expects {cfg.frame_width}x{cfg.frame_height}"
            )
    else:
        source = SyntheticSource(
            pattern or "gradient",
            width=cfg.frame_width,
            height=cfg.frame_height,
            fps=cfg.target_fps,
        )

    if headless:
        recorder = None
        if record_dir:
            recorder = FrameRecorder(
                record_dir, cfg.target_fps, cfg.frame_width, cfg.frame_height
            )
        last_level = 0

        def report(snap):
            nonlocal last_level
            if snap.level != last_level:
                click.echo(f"level {snap.level} at {snap.timestamp_ms:.0f} ms")
                last_level = snap.level

        max_frames = None
        if wav_path is None:
            # Without audio the session never progresses; bound the run.
            max_frames = int(cfg.target_fps * 10)
        snapshots = run_headless(
            cfg, source, wav_path, max_frames=max_frames, recorder=recorder, on_frame=report
        )
        if recorder is not None and not recorder.stopped:
            manifest = recorder.stop()
            click.echo(f"recorded {manifest.frame_count} frames to {record_dir}")
        if snapshots:
            final = snapshots[-1]
            click.echo(
                f"processed {len(snapshots)} frames; final level {final.level} "
                f"({final.percent:.0f}%)"
            )
        return

    service = MirrorService(
        cfg,
        source,
        wav_path=wav_path,
        host="0.0.0.0",
        port=port,
        record_dir=record_dir,
        static_dir=_default_static_dir(),
    )
    service.start()
    click.echo(f"serving on http://0.0.0.0:{service.port} (Ctrl-C to stop)")
    try:
        while True:
            service._stop.wait(3600)
            if service._stop.is_set():
                break
    except KeyboardInterrupt:
        click.echo("stopping")
    finally:
        service.stop()


if __name__ == "__main__":
    main()
