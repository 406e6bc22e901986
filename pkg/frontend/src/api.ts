/** Thin typed client for the /api/v1 endpoints. The UI never computes an
 * indicator itself; everything displayed comes back from these calls. */

import type {
  ApiErrorBody,
  IndicatorsRequest,
  IndicatorsResponse,
  PresetsResponse,
  SimulateRequest,
  SimulateResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
    readonly fields: string[] = [],
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Structural interface of the API surface the UI consumes; tests provide
 * fakes that satisfy it. */
export interface ServiceClient {
  getPresets(): Promise<PresetsResponse>;
  simulate(body: SimulateRequest): Promise<SimulateResponse>;
  indicators(body: IndicatorsRequest): Promise<IndicatorsResponse>;
}

export class ApiClient implements ServiceClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  getPresets(): Promise<PresetsResponse> {
    return this.request<PresetsResponse>("/api/v1/presets", { method: "GET" });
  }

  simulate(body: SimulateRequest): Promise<SimulateResponse> {
    return this.request<SimulateResponse>("/api/v1/simulate", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  indicators(body: IndicatorsRequest): Promise<IndicatorsResponse> {
    return this.request<IndicatorsResponse>("/api/v1/indicators", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  private async request<T>(path: string, init: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(this.baseUrl + path, init);
    } catch (err) {
      throw new ApiError(0, `service unreachable: ${String(err)}`);
    }
    const payload = (await response.json()) as T | ApiErrorBody;
    if (!response.ok) {
      const body = payload as ApiErrorBody;
      const message = body?.error?.message ?? `request failed (${response.status})`;
      throw new ApiError(response.status, message, body?.error?.fields ?? []);
    }
    return payload as T;
  }
}
