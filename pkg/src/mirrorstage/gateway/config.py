"""Engine configuration as JSON: field names mirror the config dataclasses.

Documents may specify any subset of fields (missing ones keep their current
value); unknown keys are rejected at every nesting level so typos never pass
silently.
"""

from __future__ import annotations

import json
from dataclasses import replace
from pathlib import Path
from typing import Any, Optional

from ..audio import StabilityConfig
from ..effects import NoiseParams, StarParams
from ..engine import EngineConfig


class ConfigError(ValueError):
    """A configuration document is malformed or out of range."""


def engine_config_to_dict(cfg: EngineConfig) -> dict:
    return {
        "frame_width": cfg.frame_width,
        "frame_height": cfg.frame_height,
        "target_fps": cfg.target_fps,
        "tracking_tolerance": cfg.tracking_tolerance,
        "level_override": cfg.level_override,
        "stability": {
            "interval_ms": cfg.stability.interval_ms,
            "rel_pitch_tol": cfg.stability.rel_pitch_tol,
            "rel_amp_tol": cfg.stability.rel_amp_tol,
            "level_durations_ms": list(cfg.stability.level_durations_ms),
            "silence_rms": cfg.stability.silence_rms,
        },
        "noise": {
            "seed": cfg.noise.seed,
            "octaves": cfg.noise.octaves,
            "persistence": cfg.noise.persistence,
            "base_cell_size": cfg.noise.base_cell_size,
        },
        "star": {
            "gain": cfg.star.gain,
            "min_scale": cfg.star.min_scale,
            "max_scale": cfg.star.max_scale,
        },
    }


_GROUPS = {
    "stability": ("interval_ms", "rel_pitch_tol", "rel_amp_tol", "level_durations_ms", "silence_rms"),
    "noise": ("seed", "octaves", "persistence", "base_cell_size"),
    "star": ("gain", "min_scale", "max_scale"),
}
_SCALARS = ("frame_width", "frame_height", "target_fps", "tracking_tolerance", "level_override")


def _merge_group(current, cls, data: Any, group: str):
    if not isinstance(data, dict):
        raise ConfigError(f"{group!r} must be an object")
    unknown = set(data) - set(_GROUPS[group])
    if unknown:
        raise ConfigError(f"unknown key(s) in {group!r}: {sorted(unknown)}")
    fields = {name: data[name] for name in _GROUPS[group] if name in data}
    if "level_durations_ms" in fields:
        value = fields["level_durations_ms"]
        if not isinstance(value, (list, tuple)):
            raise ConfigError("level_durations_ms must be a list")
        fields["level_durations_ms"] = tuple(value)
    try:
        return replace(current, **fields) if current is not None else cls(**fields)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid {group!r} configuration: {exc}") from exc


def engine_config_from_dict(data: dict, base: Optional[EngineConfig] = None) -> EngineConfig:
    """Build an EngineConfig from a (possibly partial) document over ``base``."""
    if not isinstance(data, dict):
        raise ConfigError("configuration must be a JSON object")
    base = base or EngineConfig()
    unknown = set(data) - set(_SCALARS) - set(_GROUPS)
    if unknown:
        raise ConfigError(f"unknown key(s): {sorted(unknown)}")

    fields: dict[str, Any] = {name: data[name] for name in _SCALARS if name in data}
    if "stability" in data:
        fields["stability"] = _merge_group(base.stability, StabilityConfig, data["stability"], "stability")
    if "noise" in data:
        fields["noise"] = _merge_group(base.noise, NoiseParams, data["noise"], "noise")
    if "star" in data:
        fields["star"] = _merge_group(base.star, StarParams, data["star"], "star")
    try:
        return replace(base, **fields)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid configuration: {exc}") from exc


def load_config(path: Path | str) -> EngineConfig:
    """Read a JSON config file; missing fields fall back to the defaults."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON: {exc}") from exc
    return engine_config_from_dict(data)
