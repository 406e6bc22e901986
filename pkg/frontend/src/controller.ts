/** Orchestrates the what-if loop: parameter changes issue debounced service
 * requests; in-flight responses carry a sequence number and stale ones are
 * discarded, so the panel only ever shows the newest response. */

import { ApiError, type ServiceClient } from "./api.js";
import {
  buildIndicatorsRequest,
  changesPhysicalSetup,
  cityPreset,
  initialParams,
  investmentFor,
  type WhatIfParams,
} from "./state.js";
import type {
  IndicatorReportJson,
  PresetsResponse,
  SimulationResultJson,
} from "./types.js";

export interface ComparisonEntry {
  city: string;
  report: IndicatorReportJson;
}

export interface ViewState {
  ready: boolean;
  params: WhatIfParams | null;
  report: IndicatorReportJson | null;
  comparison: ComparisonEntry[] | null;
  error: string | null;
  busy: boolean;
}

type Listener = (view: ViewState) => void;

export interface ControllerOptions {
  debounceMs?: number;
  /** The side-by-side city section; disable in tests that count requests. */
  comparison?: boolean;
}

export class WhatIfController {
  private presets: PresetsResponse | null = null;
  private params: WhatIfParams | null = null;
  private report: IndicatorReportJson | null = null;
  private comparison: ComparisonEntry[] | null = null;
  private error: string | null = null;
  private inFlight = 0;

  private requestSeq = 0;
  private appliedSeq = 0;
  private compareSeq = 0;
  private appliedCompareSeq = 0;

  private simulated: {
    baseline: SimulationResultJson;
    scenario: SimulationResultJson;
  } | null = null;
  private debounceTimer: ReturnType<typeof setTimeout> | null = null;

  private readonly debounceMs: number;
  private readonly comparisonEnabled: boolean;

  constructor(
    private readonly client: ServiceClient,
    private readonly listener: Listener,
    options: ControllerOptions = {},
  ) {
    this.debounceMs = options.debounceMs ?? 150;
    this.comparisonEnabled = options.comparison ?? true;
  }

  view(): ViewState {
    return {
      ready: this.presets !== null && this.params !== null,
      params: this.params,
      report: this.report,
      comparison: this.comparison,
      error: this.error,
      busy: this.inFlight > 0,
    };
  }

  getPresets(): PresetsResponse {
    if (!this.presets) {
      throw new Error("controller not started");
    }
    return this.presets;
  }

  async start(): Promise<void> {
    try {
      this.presets = await this.client.getPresets();
      this.params = initialParams(this.presets);
      this.notify();
      await this.refresh();
    } catch (err) {
      this.error = describeError(err);
      this.notify();
    }
  }

  /** Update one parameter and schedule a refresh; physical changes drop the
   * cached simulation pair so the next refresh re-simulates. */
  setParam<K extends keyof WhatIfParams>(key: K, value: WhatIfParams[K]): void {
    if (!this.params) {
      return;
    }
    this.params = { ...this.params, [key]: value };
    if (key === "scenario" && this.presets) {
      this.params = {
        ...this.params,
        investmentEur: investmentFor(this.presets, String(value)),
      };
    }
    if (changesPhysicalSetup(key)) {
      this.simulated = null;
    }
    this.notify();
    this.scheduleRefresh();
  }

  private scheduleRefresh(): void {
    if (this.debounceTimer !== null) {
      clearTimeout(this.debounceTimer);
    }
    this.debounceTimer = setTimeout(() => {
      this.debounceTimer = null;
      void this.refresh();
    }, this.debounceMs);
  }

  /** Issue the service round-trip for the current parameters. An explicit
   * refresh supersedes any debounced one still waiting on the timer. */
  async refresh(): Promise<void> {
    if (!this.presets || !this.params) {
      return;
    }
    if (this.debounceTimer !== null) {
      clearTimeout(this.debounceTimer);
      this.debounceTimer = null;
    }
    const seq = ++this.requestSeq;
    const params = this.params;
    this.inFlight += 1;
    this.notify();
    try {
      if (params.source === "simulation" && this.simulated === null) {
        const preset = cityPreset(this.presets, params.city);
        const [baseline, scenario] = await Promise.all([
          this.client.simulate({ preset, scenario: "baseline", seed: params.seed }),
          this.client.simulate({ preset, scenario: params.scenario, seed: params.seed }),
        ]);
        if (seq !== this.requestSeq) {
          return; // superseded while simulating
        }
        this.simulated = { baseline: baseline.result, scenario: scenario.result };
      }
      const request = buildIndicatorsRequest(this.presets, params, this.simulated);
      const response = await this.client.indicators(request);
      if (seq < this.requestSeq || seq <= this.appliedSeq) {
        return; // a newer request exists or was already applied
      }
      this.appliedSeq = seq;
      this.report = response.report;
      this.error = null;
    } catch (err) {
      if (seq === this.requestSeq) {
        this.error = describeError(err);
      }
    } finally {
      this.inFlight -= 1;
      this.notify();
    }
    await this.refreshComparison();
  }

  /** Side-by-side city view from the bundled savings rows, under the same
   * scenario, prices and econ parameters. */
  private async refreshComparison(): Promise<void> {
    if (!this.comparisonEnabled || !this.presets || !this.params) {
      return;
    }
    const seq = ++this.compareSeq;
    const params = this.params;
    try {
      const entries = await Promise.all(
        this.presets.cities.map(async (city) => {
          const cityParams: WhatIfParams = {
            ...params,
            city: city.name,
            source: "reference",
          };
          const request = buildIndicatorsRequest(this.presets!, cityParams, null);
          const response = await this.client.indicators(request);
          return { city: city.name, report: response.report };
        }),
      );
      if (seq < this.compareSeq || seq <= this.appliedCompareSeq) {
        return;
      }
      this.appliedCompareSeq = seq;
      this.comparison = entries;
    } catch {
      // the main panel already surfaces errors; leave the old bars in place
    }
    this.notify();
  }

  dispose(): void {
    if (this.debounceTimer !== null) {
      clearTimeout(this.debounceTimer);
      this.debounceTimer = null;
    }
  }

  private notify(): void {
    this.listener(this.view());
  }
}

function describeError(err: unknown): string {
  if (err instanceof ApiError) {
    return err.status > 0 ? `service error ${err.status}: ${err.message}` : err.message;
  }
  return String(err);
}
