import json

import pytest

from mirrorstage import EngineConfig
from mirrorstage.gateway import (
    ConfigError,
    engine_config_from_dict,
    engine_config_to_dict,
    load_config,
)


class TestConfigDocuments:
    def test_defaults_round_trip(self):
        cfg = EngineConfig()
        assert engine_config_from_dict(engine_config_to_dict(cfg)) == cfg

    def test_file_round_trip(self, tmp_path):
        cfg = EngineConfig(frame_width=64, frame_height=48, tracking_tolerance=30)
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps(engine_config_to_dict(cfg)))
        assert load_config(path) == cfg

    def test_partial_update_keeps_rest(self):
        base = EngineConfig()
        cfg = engine_config_from_dict({"tracking_tolerance": 40}, base=base)
        assert cfg.tracking_tolerance == 40
        assert cfg.stability == base.stability

    def test_nested_partial_update(self):
        cfg = engine_config_from_dict({"stability": {"rel_pitch_tol": 0.1}})
        assert cfg.stability.rel_pitch_tol == 0.1
        assert cfg.stability.rel_amp_tol == EngineConfig().stability.rel_amp_tol

    def test_unknown_top_level_key_rejected(self):
        with pytest.raises(ConfigError, match="frame_widht"):
            engine_config_from_dict({"frame_widht": 320})

    def test_unknown_nested_key_rejected(self):
        with pytest.raises(ConfigError, match="sede"):
            engine_config_from_dict({"noise": {"sede": 1}})

    def test_range_validation_surfaces_as_config_error(self):
        with pytest.raises(ConfigError):
            engine_config_from_dict({"tracking_tolerance": 400})
        with pytest.raises(ConfigError):
            engine_config_from_dict({"stability": {"level_durations_ms": [1, 2]}})
        with pytest.raises(ConfigError):
            engine_config_from_dict({"star": {"min_scale": 2.0}})

    def test_level_durations_list_becomes_tuple(self):
        cfg = engine_config_from_dict({"stability": {"level_durations_ms": [1000, 2000, 3000]}})
        assert cfg.stability.level_durations_ms == (1000.0, 2000.0, 3000.0)

    def test_invalid_json_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{nope")
        with pytest.raises(ConfigError, match="invalid JSON"):
            load_config(path)

    def test_non_object_rejected(self):
        with pytest.raises(ConfigError):
            engine_config_from_dict([1, 2, 3])
