import numpy as np
import pytest

from mirrorstage import (
    ArgbMatrix,
    ColorRange,
    DimensionMismatchError,
    EngineConfig,
    PitchReading,
    ProgressState,
    Stage,
    apply_override,
    burn_stage,
    dissolve,
    fft_star,
    find_bounds,
    mirror_y,
    process_frame,
    route,
    solvent_split,
    star_composite,
    tint_progress,
)
from mirrorstage.audio import StabilityConfig

from conftest import random_matrix


def small_cfg(width=16, height=16, **kwargs):
    return EngineConfig(frame_width=width, frame_height=height, **kwargs)


class TestRoute:
    def test_stage_order(self):
        assert route(1) is Stage.MIRROR_ONLY
        assert route(2) is Stage.BURN
        assert route(3) is Stage.DISSOLVE
        assert route(4) is Stage.SOLVENT_STAR

    def test_invalid_level(self):
        with pytest.raises(ValueError):
            route(5)
        with pytest.raises(ValueError):
            route(0)


class TestProcessFrame:
    def test_level_one_zero_percent_is_mirror(self, rng):
        m = random_matrix(rng, 16, 16)
        out, snap = process_frame(m, (1, 0.0), None, small_cfg())
        assert out == mirror_y(m)
        assert snap.level == 1 and snap.percent == 0.0 and snap.bbox is None

    def test_level_two_matches_hand_chain(self, rng):
        cfg = small_cfg()
        m = random_matrix(rng, 16, 16)
        out, _ = process_frame(m, (2, 100.0), None, cfg)
        expected = tint_progress(
            burn_stage(mirror_y(m), 100.0, cfg.noise, cfg.star), 100.0
        )
        assert out == expected

    def test_level_three_matches_hand_chain(self, rng):
        cfg = small_cfg()
        m = random_matrix(rng, 16, 16)
        out, _ = process_frame(m, (3, 40.0), None, cfg)
        assert out == tint_progress(dissolve(mirror_y(m), 0.4), 40.0)

    def test_level_four_without_range_is_solvent(self, rng):
        cfg = small_cfg()
        m = random_matrix(rng, 16, 16)
        out, snap = process_frame(m, (4, 100.0), None, cfg)
        base, _, _ = solvent_split(mirror_y(m))
        assert out == base
        assert snap.bbox is None

    def test_level_four_with_range_matches_hand_chain(self, rng):
        cfg = small_cfg(width=32, height=32)
        m = random_matrix(rng, 32, 32)
        cr = ColorRange(min_r=0, min_g=0, min_b=0, max_r=255, max_g=255, max_b=255)
        out, snap = process_frame(m, (4, 100.0), cr, cfg)
        mirrored = mirror_y(m)
        base, _, _ = solvent_split(mirrored)
        bbox = find_bounds(mirrored, cr)
        assert snap.bbox == bbox
        assert out == star_composite(base, fft_star(mirrored, cfg.star), bbox, cfg.star)

    def test_bbox_reported_while_calibrating(self, rng):
        # The snapshot carries the tracked box at any level once a color is set.
        cfg = small_cfg()
        m = random_matrix(rng, 16, 16)
        cr = ColorRange(min_r=0, min_g=0, min_b=0, max_r=255, max_g=255, max_b=255)
        _, snap = process_frame(m, (1, 0.0), cr, cfg)
        assert snap.bbox == find_bounds(mirror_y(m), cr)

    def test_deterministic(self, rng):
        cfg = small_cfg()
        m = random_matrix(rng, 16, 16)
        out1, snap1 = process_frame(m, (2, 55.0), None, cfg, frame_index=7, timestamp_ms=1.0)
        out2, snap2 = process_frame(m, (2, 55.0), None, cfg, frame_index=7, timestamp_ms=1.0)
        assert out1 == out2 and snap1 == snap2

    def test_dimensions_preserved_at_every_level(self, rng):
        cfg = small_cfg(width=20, height=12)
        m = random_matrix(rng, 20, 12)
        for level in (1, 2, 3, 4):
            percent = 100.0 if level == 4 else 42.0
            out, _ = process_frame(m, (level, percent), None, cfg)
            assert (out.width, out.height) == (20, 12)

    def test_red_mean_monotone_in_percent(self, rng):
        cfg = small_cfg(width=32, height=32)
        m = random_matrix(rng, 32, 32)
        for level in (1, 2, 3):
            means = []
            for percent in range(0, 101, 10):
                out, _ = process_frame(m, (level, float(percent)), None, cfg)
                means.append(float(out.r.mean()))
            assert all(b >= a - 1e-9 for a, b in zip(means, means[1:])), (level, means)

    def test_dimension_mismatch(self, rng):
        with pytest.raises(DimensionMismatchError):
            process_frame(random_matrix(rng, 8, 8), (1, 0.0), None, small_cfg(16, 16))

    def test_invalid_level_and_percent(self, rng):
        m = random_matrix(rng, 16, 16)
        with pytest.raises(ValueError):
            process_frame(m, (5, 0.0), None, small_cfg())
        with pytest.raises(ValueError):
            process_frame(m, (1, 101.0), None, small_cfg())

    def test_snapshot_carries_reading(self, rng):
        m = random_matrix(rng, 16, 16)
        reading = PitchReading(pitch_hz=440.0, amplitude_rms=0.25)
        _, snap = process_frame(
            m, (1, 0.0), None, small_cfg(), frame_index=3, timestamp_ms=66.0, reading=reading
        )
        assert snap.frame_index == 3
        assert snap.timestamp_ms == 66.0
        assert snap.pitch_hz == 440.0
        assert snap.amplitude_rms == 0.25


class TestApplyOverride:
    def test_absent_override_passthrough(self):
        cfg = EngineConfig()
        state = ProgressState(level=2, percent=30.0, stable_since_ms=0.0)
        assert apply_override(cfg, state) == (2, 30.0)

    def test_terminal_override_forces_full(self):
        cfg = EngineConfig(level_override=4)
        assert apply_override(cfg, ProgressState()) == (4, 100.0)

    def test_override_keeps_state_percent(self):
        cfg = EngineConfig(level_override=2)
        state = ProgressState(level=1, percent=30.0, stable_since_ms=0.0)
        assert apply_override(cfg, state) == (2, 30.0)

    def test_override_validation(self):
        with pytest.raises(ValueError):
            EngineConfig(level_override=5)


class TestEngineConfig:
    def test_defaults(self):
        cfg = EngineConfig()
        assert (cfg.frame_width, cfg.frame_height) == (320, 240)
        assert cfg.target_fps == 15.0
        assert cfg.tracking_tolerance == 24
        assert cfg.stability == StabilityConfig()

    def test_validation(self):
        with pytest.raises(ValueError):
            EngineConfig(frame_width=0)
        with pytest.raises(ValueError):
            EngineConfig(target_fps=0)
        with pytest.raises(ValueError):
            EngineConfig(tracking_tolerance=300)
