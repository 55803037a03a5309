/** Thin typed client over the gateway's HTTP endpoints. */

import type { ColorRange, EngineConfig, RecordingManifest, Telemetry } from './types.js';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string
  ) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = '',
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init)
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    const body = await response.json().catch(() => ({}));
    if (!response.ok) {
      const message =
        typeof body === 'object' && body !== null && 'error' in body
          ? String((body as { error: unknown }).error)
          : `request failed with status ${response.status}`;
      throw new ApiError(response.status, message);
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(payload),
    });
  }

  getState(): Promise<Telemetry> {
    return this.request<Telemetry>('/state');
  }

  getConfig(): Promise<EngineConfig> {
    return this.request<EngineConfig>('/config');
  }

  postConfig(patch: Partial<EngineConfig>): Promise<EngineConfig> {
    return this.post<EngineConfig>('/config', patch);
  }

  pick(x: number, y: number): Promise<ColorRange> {
    return this.post<ColorRange>('/pick', { x, y });
  }

  override(level: number | null): Promise<{ level: number | null }> {
    return this.post<{ level: number | null }>('/override', { level });
  }

  stopRecording(): Promise<RecordingManifest> {
    return this.post<RecordingManifest>('/record/stop', {});
  }
}
