/** Wire types mirroring the gateway's JSON documents, field for field. */

export interface ColorRange {
  min_r: number;
  min_g: number;
  min_b: number;
  max_r: number;
  max_g: number;
  max_b: number;
}

export interface BBox {
  min_x: number;
  min_y: number;
  max_x: number;
  max_y: number;
  center_x: number;
  center_y: number;
  width: number;
  height: number;
}

export interface Telemetry {
  frame_index: number;
  level: number;
  percent: number;
  bbox: BBox | null;
  pitch_hz: number | null;
  amplitude_rms: number;
  timestamp_ms: number;
}

export interface StabilityConfig {
  interval_ms: number;
  rel_pitch_tol: number;
  rel_amp_tol: number;
  level_durations_ms: number[];
  silence_rms: number;
}

export interface NoiseConfig {
  seed: number;
  octaves: number;
  persistence: number;
  base_cell_size: number;
}

export interface StarConfig {
  gain: number;
  min_scale: number;
  max_scale: number;
}

export interface EngineConfig {
  frame_width: number;
  frame_height: number;
  target_fps: number;
  tracking_tolerance: number;
  level_override: number | null;
  stability: StabilityConfig;
  noise: NoiseConfig;
  star: StarConfig;
}

export interface RecordingManifest {
  session_id: string;
  frame_count: number;
  fps: number;
  width: number;
  height: number;
  started_at: string;
  stopped_at: string | null;
}
