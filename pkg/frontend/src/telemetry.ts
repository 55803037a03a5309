/** Pure view-model for the telemetry panel; the DOM layer just copies it in. */

import { cellExtentToCanvasRect, type CanvasRect, type Size } from './coords.js';
import type { ColorRange, Telemetry } from './types.js';

export interface TelemetryView {
  levelBadge: string;
  percentFraction: number;
  percentText: string;
  pitchText: string;
  amplitudeText: string;
  overlay: CanvasRect | null;
}

export function buildTelemetryView(
  snap: Telemetry,
  canvas: Size,
  frame: Size
): TelemetryView {
  return {
    levelBadge: String(snap.level),
    percentFraction: Math.min(Math.max(snap.percent / 100, 0), 1),
    percentText: `${snap.percent.toFixed(0)}%`,
    pitchText: snap.pitch_hz === null ? 'silence' : `${snap.pitch_hz.toFixed(1)} Hz`,
    amplitudeText: snap.amplitude_rms.toFixed(3),
    overlay:
      snap.bbox === null
        ? null
        : cellExtentToCanvasRect(
            snap.bbox.min_x,
            snap.bbox.min_y,
            snap.bbox.max_x,
            snap.bbox.max_y,
            canvas,
            frame
          ),
  };
}

export interface SwatchView {
  minCss: string;
  maxCss: string;
  label: string;
}

/** Render a picked color range as min/max color stops plus a text label. */
export function buildSwatch(range: ColorRange): SwatchView {
  return {
    minCss: `rgb(${range.min_r}, ${range.min_g}, ${range.min_b})`,
    maxCss: `rgb(${range.max_r}, ${range.max_g}, ${range.max_b})`,
    label:
      `R ${range.min_r}-${range.max_r} ` +
      `G ${range.min_g}-${range.max_g} ` +
      `B ${range.min_b}-${range.max_b}`,
  };
}
