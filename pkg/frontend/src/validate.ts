/**
 * Client-side config validation, mirroring the server's range rules so a
 * draft that would be rejected can never be submitted.
 */

import type { EngineConfig } from './types.js';

export function validateConfig(cfg: EngineConfig): string[] {
  const errors: string[] = [];
  const bad = (msg: string) => errors.push(msg);

  if (!(cfg.frame_width >= 1)) bad('frame_width must be positive');
  if (!(cfg.frame_height >= 1)) bad('frame_height must be positive');
  if (!(cfg.target_fps > 0)) bad('target_fps must be positive');
  if (!(cfg.tracking_tolerance >= 0 && cfg.tracking_tolerance <= 255)) {
    bad('tracking_tolerance must be in [0, 255]');
  }
  if (
    cfg.level_override !== null &&
    !(Number.isInteger(cfg.level_override) && cfg.level_override >= 1 && cfg.level_override <= 4)
  ) {
    bad('level_override must be null or an integer in [1, 4]');
  }

  const s = cfg.stability;
  if (!(s.interval_ms > 0)) bad('stability.interval_ms must be positive');
  if (!(s.rel_pitch_tol > 0)) bad('stability.rel_pitch_tol must be positive');
  if (!(s.rel_amp_tol > 0)) bad('stability.rel_amp_tol must be positive');
  if (!(s.silence_rms > 0)) bad('stability.silence_rms must be positive');
  if (s.level_durations_ms.length !== 3) {
    bad('stability.level_durations_ms must have exactly 3 entries');
  } else if (!s.level_durations_ms.every((d) => d > 0)) {
    bad('stability.level_durations_ms entries must be positive');
  }

  const n = cfg.noise;
  if (!(Number.isInteger(n.octaves) && n.octaves >= 1)) bad('noise.octaves must be >= 1');
  if (!(n.persistence > 0 && n.persistence <= 1)) bad('noise.persistence must be in (0, 1]');
  if (!(Number.isInteger(n.base_cell_size) && n.base_cell_size >= 2)) {
    bad('noise.base_cell_size must be >= 2');
  }

  const star = cfg.star;
  if (!(star.gain > 0)) bad('star.gain must be positive');
  if (!(star.min_scale > 0 && star.min_scale < star.max_scale)) {
    bad('star scales must satisfy 0 < min_scale < max_scale');
  }

  return errors;
}
