/**
 * Operator console wiring: sockets in, DOM out.
 *
 * Two subscriptions (frames, telemetry) feed latest-wins render slots; clicks
 * on the video pick the tracked color; the config form edits a draft that is
 * validated client-side before it can be submitted.
 */

import { ApiClient, ApiError } from './api.js';
import { canvasToMatrix } from './coords.js';
import { LatestSlot } from './latest.js';
import { buildSwatch, buildTelemetryView } from './telemetry.js';
import type { EngineConfig, Telemetry } from './types.js';
import { validateConfig } from './validate.js';
import { decodeFrame, FrameDecodeError, type DecodedFrame } from './wire.js';

const api = new ApiClient('');

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const canvas = el<HTMLCanvasElement>('video');
const overlayCanvas = el<HTMLCanvasElement>('overlay');
const banner = el<HTMLDivElement>('banner');
const frameCounter = el<HTMLSpanElement>('frame-counter');
const connectionBadge = el<HTMLSpanElement>('connection');
const levelBadge = el<HTMLSpanElement>('level-badge');
const percentBar = el<HTMLDivElement>('percent-bar');
const percentText = el<HTMLSpanElement>('percent-text');
const pitchText = el<HTMLSpanElement>('pitch');
const amplitudeText = el<HTMLSpanElement>('amplitude');
const swatchMin = el<HTMLSpanElement>('swatch-min');
const swatchMax = el<HTMLSpanElement>('swatch-max');
const swatchLabel = el<HTMLSpanElement>('swatch-label');
const pickStatus = el<HTMLSpanElement>('pick-status');
const configForm = el<HTMLFormElement>('config-form');
const configErrors = el<HTMLUListElement>('config-errors');
const configStatus = el<HTMLSpanElement>('config-status');
const applyButton = el<HTMLButtonElement>('config-apply');
const overrideSelect = el<HTMLSelectElement>('override');
const recordButton = el<HTMLButtonElement>('record-stop');
const recordStatus = el<HTMLSpanElement>('record-status');

let lastFrame: DecodedFrame | null = null;
let lastTelemetry: Telemetry | null = null;
let configDraft: EngineConfig | null = null;

function showBanner(message: string): void {
  banner.textContent = message;
  banner.classList.remove('hidden');
  window.setTimeout(() => banner.classList.add('hidden'), 4000);
}

// ---------------------------------------------------------------------------
// Frame rendering
// ---------------------------------------------------------------------------
const frameSlot = new LatestSlot<DecodedFrame>((frame) => {
  if (canvas.width !== frame.width || canvas.height !== frame.height) {
    canvas.width = frame.width;
    canvas.height = frame.height;
    overlayCanvas.width = frame.width;
    overlayCanvas.height = frame.height;
  }
  const ctx = canvas.getContext('2d');
  if (!ctx) return;
  ctx.putImageData(new ImageData(frame.rgba, frame.width, frame.height), 0, 0);
  lastFrame = frame;
  frameCounter.textContent = `frame ${frame.frameIndex}`;
  drawOverlay();
}, requestAnimationFrame.bind(window));

const telemetrySlot = new LatestSlot<Telemetry>((snap) => {
  lastTelemetry = snap;
  const size = { width: overlayCanvas.width || 1, height: overlayCanvas.height || 1 };
  const view = buildTelemetryView(snap, size, size);
  levelBadge.textContent = view.levelBadge;
  levelBadge.dataset.level = view.levelBadge;
  percentBar.style.width = `${view.percentFraction * 100}%`;
  percentText.textContent = view.percentText;
  pitchText.textContent = view.pitchText;
  amplitudeText.textContent = view.amplitudeText;
  drawOverlay();
}, requestAnimationFrame.bind(window));

function drawOverlay(): void {
  const ctx = overlayCanvas.getContext('2d');
  if (!ctx) return;
  ctx.clearRect(0, 0, overlayCanvas.width, overlayCanvas.height);
  const bbox = lastTelemetry?.bbox;
  if (!bbox) return;
  ctx.strokeStyle = '#28e06e';
  ctx.lineWidth = Math.max(1, overlayCanvas.width / 320);
  ctx.strokeRect(bbox.min_x, bbox.min_y, bbox.width + 1, bbox.height + 1);
}

// ---------------------------------------------------------------------------
// Click to pick
// ---------------------------------------------------------------------------
canvas.parentElement?.addEventListener('click', async (event) => {
  if (!lastFrame) {
    return; // picks are only enabled once a frame is up
  }
  const rect = canvas.getBoundingClientRect();
  const cell = canvasToMatrix(
    { x: event.clientX - rect.left, y: event.clientY - rect.top },
    { width: rect.width, height: rect.height },
    { width: lastFrame.width, height: lastFrame.height }
  );
  try {
    const range = await api.pick(cell.x, cell.y);
    const swatch = buildSwatch(range);
    swatchMin.style.backgroundColor = swatch.minCss;
    swatchMax.style.backgroundColor = swatch.maxCss;
    swatchLabel.textContent = swatch.label;
    pickStatus.textContent = `picked cell (${cell.x}, ${cell.y})`;
  } catch (error) {
    pickStatus.textContent = error instanceof ApiError ? error.message : 'pick failed';
  }
});

// ---------------------------------------------------------------------------
// Config draft editing
// ---------------------------------------------------------------------------
const FIELDS: Array<[string, (cfg: EngineConfig) => number, (cfg: EngineConfig, v: number) => void]> = [
  ['tracking_tolerance', (c) => c.tracking_tolerance, (c, v) => (c.tracking_tolerance = v)],
  ['rel_pitch_tol', (c) => c.stability.rel_pitch_tol, (c, v) => (c.stability.rel_pitch_tol = v)],
  ['rel_amp_tol', (c) => c.stability.rel_amp_tol, (c, v) => (c.stability.rel_amp_tol = v)],
  ['silence_rms', (c) => c.stability.silence_rms, (c, v) => (c.stability.silence_rms = v)],
  ['duration_1', (c) => c.stability.level_durations_ms[0] ?? 0, (c, v) => (c.stability.level_durations_ms[0] = v)],
  ['duration_2', (c) => c.stability.level_durations_ms[1] ?? 0, (c, v) => (c.stability.level_durations_ms[1] = v)],
  ['duration_3', (c) => c.stability.level_durations_ms[2] ?? 0, (c, v) => (c.stability.level_durations_ms[2] = v)],
  ['star_gain', (c) => c.star.gain, (c, v) => (c.star.gain = v)],
  ['star_min_scale', (c) => c.star.min_scale, (c, v) => (c.star.min_scale = v)],
  ['star_max_scale', (c) => c.star.max_scale, (c, v) => (c.star.max_scale = v)],
];

function fillForm(cfg: EngineConfig): void {
  for (const [id, get] of FIELDS) {
    el<HTMLInputElement>(id).value = String(get(cfg));
  }
}

function readForm(base: EngineConfig): EngineConfig {
  const draft: EngineConfig = structuredClone(base);
  for (const [id, , set] of FIELDS) {
    set(draft, Number(el<HTMLInputElement>(id).value));
  }
  return draft;
}

function refreshValidation(): void {
  if (!configDraft) return;
  const draft = readForm(configDraft);
  const errors = validateConfig(draft);
  configErrors.replaceChildren(
    ...errors.map((message) => {
      const item = document.createElement('li');
      item.textContent = message;
      return item;
    })
  );
  applyButton.disabled = errors.length > 0;
}

configForm.addEventListener('input', refreshValidation);

configForm.addEventListener('submit', async (event) => {
  event.preventDefault();
  if (!configDraft) return;
  const draft = readForm(configDraft);
  if (validateConfig(draft).length > 0) {
    return; // never submit an invalid draft
  }
  try {
    configDraft = await api.postConfig(draft);
    fillForm(configDraft);
    configStatus.textContent = 'applied';
  } catch (error) {
    configStatus.textContent = error instanceof ApiError ? error.message : 'update failed';
  }
  window.setTimeout(() => (configStatus.textContent = ''), 3000);
});

overrideSelect.addEventListener('change', async () => {
  const value = overrideSelect.value;
  try {
    await api.override(value === '' ? null : Number(value));
  } catch (error) {
    showBanner(error instanceof ApiError ? error.message : 'override failed');
  }
});

recordButton.addEventListener('click', async () => {
  try {
    const manifest = await api.stopRecording();
    recordStatus.textContent = `stopped: ${manifest.frame_count} frames`;
    recordButton.disabled = true;
  } catch (error) {
    recordStatus.textContent = error instanceof ApiError ? error.message : 'stop failed';
  }
});

// ---------------------------------------------------------------------------
// Socket subscriptions (auto-reconnect, latest-wins)
// ---------------------------------------------------------------------------
function wsUrl(path: string): string {
  const scheme = location.protocol === 'https:' ? 'wss' : 'ws';
  return `${scheme}://${location.host}${path}`;
}

function subscribe(path: string, onMessage: (data: ArrayBuffer | string) => void): void {
  const socket = new WebSocket(wsUrl(path));
  socket.binaryType = 'arraybuffer';
  socket.onopen = () => {
    connectionBadge.textContent = 'connected';
    connectionBadge.classList.add('ok');
  };
  socket.onmessage = (event) => onMessage(event.data);
  socket.onclose = () => {
    connectionBadge.textContent = 'reconnecting';
    connectionBadge.classList.remove('ok');
    window.setTimeout(() => subscribe(path, onMessage), 2000);
  };
  socket.onerror = () => socket.close();
}

subscribe('/frames', (data) => {
  if (!(data instanceof ArrayBuffer)) return;
  try {
    frameSlot.push(decodeFrame(data));
  } catch (error) {
    if (error instanceof FrameDecodeError) {
      showBanner(error.message); // stream continues
    }
  }
});

subscribe('/telemetry', (data) => {
  if (typeof data !== 'string') return;
  try {
    telemetrySlot.push(JSON.parse(data) as Telemetry);
  } catch {
    showBanner('malformed telemetry message');
  }
});

api
  .getConfig()
  .then((cfg) => {
    configDraft = cfg;
    fillForm(cfg);
    refreshValidation();
  })
  .catch(() => showBanner('could not load engine config'));
