import type { EngineConfig } from '../src/types.js';

/** Build an AMF1 wire message for a solid-color frame. */
export function solidFrameMessage(
  width: number,
  height: number,
  frameIndex: number,
  rgba: [number, number, number, number]
): ArrayBuffer {
  const buffer = new ArrayBuffer(16 + width * height * 4);
  const view = new DataView(buffer);
  view.setUint8(0, 0x41); // A
  view.setUint8(1, 0x4d); // M
  view.setUint8(2, 0x46); // F
  view.setUint8(3, 0x31); // 1
  view.setUint32(4, width, true);
  view.setUint32(8, height, true);
  view.setUint32(12, frameIndex, true);
  const body = new Uint8Array(buffer, 16);
  for (let i = 0; i < width * height; i++) {
    body.set(rgba, i * 4);
  }
  return buffer;
}

export function defaultConfig(): EngineConfig {
  return {
    frame_width: 320,
    frame_height: 240,
    target_fps: 15,
    tracking_tolerance: 24,
    level_override: null,
    stability: {
      interval_ms: 200,
      rel_pitch_tol: 0.06,
      rel_amp_tol: 0.25,
      level_durations_ms: [5000, 8000, 12000],
      silence_rms: 0.01,
    },
    noise: { seed: 0, octaves: 4, persistence: 0.5, base_cell_size: 16 },
    star: { gain: 1, min_scale: 0.1, max_scale: 1 },
  };
}
