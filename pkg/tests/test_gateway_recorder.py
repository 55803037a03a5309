import json

import pytest

from mirrorstage.gateway import FrameRecorder, RecorderStoppedError, read_frame_sequence
from mirrorstage.gateway.recorder import MANIFEST_NAME, RecordingManifest

from conftest import random_matrix


class TestRecorder:
    def test_write_and_stop_counts_frames(self, rng, tmp_path):
        rec = FrameRecorder(tmp_path / "rec", fps=15, width=16, height=12)
        frames = [random_matrix(rng, 16, 12) for _ in range(5)]
        for f in frames:
            rec.write(f)
        manifest = rec.stop()
        assert manifest.frame_count == 5
        assert manifest.stopped_at is not None
        assert len(list((tmp_path / "rec").glob("frame_*.png"))) == 5

    def test_manifest_file_round_trip(self, rng, tmp_path):
        rec = FrameRecorder(tmp_path / "rec", fps=15, width=8, height=8)
        rec.write(random_matrix(rng, 8, 8))
        manifest = rec.stop()
        on_disk = json.loads((tmp_path / "rec" / MANIFEST_NAME).read_text())
        assert RecordingManifest.from_dict(on_disk) == manifest

    def test_write_after_stop_rejected(self, rng, tmp_path):
        rec = FrameRecorder(tmp_path / "rec", fps=15, width=8, height=8)
        rec.stop()
        with pytest.raises(RecorderStoppedError):
            rec.write(random_matrix(rng, 8, 8))

    def test_stop_twice_rejected(self, tmp_path):
        rec = FrameRecorder(tmp_path / "rec", fps=15, width=8, height=8)
        rec.stop()
        with pytest.raises(RecorderStoppedError):
            rec.stop()

    def test_zero_frames_is_valid(self, tmp_path):
        rec = FrameRecorder(tmp_path / "rec", fps=15, width=8, height=8)
        manifest = rec.stop()
        assert manifest.frame_count == 0

    def test_dimension_mismatch(self, rng, tmp_path):
        rec = FrameRecorder(tmp_path / "rec", fps=15, width=8, height=8)
        with pytest.raises(ValueError):
            rec.write(random_matrix(rng, 9, 8))

    def test_round_trip_is_bitwise(self, rng, tmp_path):
        rec = FrameRecorder(tmp_path / "rec", fps=15, width=20, height=14)
        frames = [random_matrix(rng, 20, 14) for _ in range(10)]
        for f in frames:
            rec.write(f)
        rec.stop()
        restored = list(read_frame_sequence(tmp_path / "rec", fps=15).frames())
        assert len(restored) == 10
        assert all(a == b for a, b in zip(frames, restored))
