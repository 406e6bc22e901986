/** What-if parameters and pure request-building helpers.
 *
 * The client assembles request inputs (which savings row, which price book,
 * which econ parameters) but performs no indicator arithmetic; displayed
 * numbers always originate from a service response. */

import type {
  IndicatorsRequest,
  PresetsResponse,
  PriceBookJson,
  ReferenceSavingsJson,
  SavingsBody,
  SimulationResultJson,
  TariffJson,
} from "./types.js";

export type DataSource = "reference" | "simulation";

export interface WhatIfParams {
  city: string;
  scenario: string;
  source: DataSource;
  electricityPriceFactor: number;
  gasPriceFactor: number;
  discountRate: number;
  horizonYears: number;
  investmentEur: number;
  seed: number;
}

/** Parameters whose change invalidates cached simulation results. */
const PHYSICAL_PARAMS: ReadonlySet<keyof WhatIfParams> = new Set([
  "city",
  "scenario",
  "source",
  "seed",
]);

export function changesPhysicalSetup(key: keyof WhatIfParams): boolean {
  return PHYSICAL_PARAMS.has(key);
}

export function initialParams(presets: PresetsResponse): WhatIfParams {
  const scenario = "low-cost";
  return {
    city: "stuttgart",
    scenario,
    source: "reference",
    electricityPriceFactor: 1.0,
    gasPriceFactor: 1.0,
    discountRate: presets.defaults.econ.discount_rate,
    horizonYears: presets.defaults.econ.horizon_years,
    investmentEur: investmentFor(presets, scenario),
    seed: presets.defaults.seed,
  };
}

export function investmentFor(presets: PresetsResponse, scenario: string): number {
  const spec = presets.scenarios.find((s) => s.name === scenario);
  return spec ? spec.investment_eur : 0;
}

export function cityBookName(presets: PresetsResponse, city: string): string {
  const entry = presets.cities.find((c) => c.name === city);
  if (!entry) {
    throw new Error(`unknown city '${city}'`);
  }
  return entry.price_book;
}

export function cityPreset(presets: PresetsResponse, city: string): string {
  const entry = presets.cities.find((c) => c.name === city);
  if (!entry) {
    throw new Error(`unknown city '${city}'`);
  }
  return entry.weather_preset;
}

export function referenceSavings(
  presets: PresetsResponse,
  city: string,
  scenario: string,
): ReferenceSavingsJson {
  const row = presets.reference_savings.find(
    (r) => r.city === city && r.scenario === scenario,
  );
  if (!row) {
    throw new Error(`no bundled savings for ${city}/${scenario}`);
  }
  return row;
}

function scaleTariff(tariff: TariffJson, factor: number): TariffJson {
  if (tariff.type === "flat") {
    return { type: "flat", rate_eur_per_kwh: tariff.rate_eur_per_kwh * factor };
  }
  return {
    type: "block",
    threshold_kwh: tariff.threshold_kwh,
    low_rate_eur_per_kwh: tariff.low_rate_eur_per_kwh * factor,
    high_rate_eur_per_kwh: tariff.high_rate_eur_per_kwh * factor,
    periods_per_year: tariff.periods_per_year,
  };
}

/** Price sliders scale the city's preset book, preserving its structure
 * (block tariffs stay block tariffs). Factor 1 passes the preset through
 * by name so the service echo names it. */
export function effectivePriceBook(
  presets: PresetsResponse,
  params: WhatIfParams,
): string | Omit<PriceBookJson, "country"> {
  const name = cityBookName(presets, params.city);
  if (params.electricityPriceFactor === 1.0 && params.gasPriceFactor === 1.0) {
    return name;
  }
  const book = presets.price_books[name];
  if (!book) {
    throw new Error(`price book '${name}' missing from presets`);
  }
  return {
    electricity: scaleTariff(book.electricity, params.electricityPriceFactor),
    gas: scaleTariff(book.gas, params.gasPriceFactor),
  };
}

export function buildIndicatorsRequest(
  presets: PresetsResponse,
  params: WhatIfParams,
  simulated: {
    baseline: SimulationResultJson;
    scenario: SimulationResultJson;
  } | null,
): IndicatorsRequest {
  const base: IndicatorsRequest = {
    price_book: effectivePriceBook(presets, params),
    scenario: params.scenario,
    econ: {
      discount_rate: params.discountRate,
      horizon_years: params.horizonYears,
      investment_eur: params.investmentEur,
    },
  };
  if (params.source === "simulation") {
    if (!simulated) {
      throw new Error("simulation results not loaded yet");
    }
    return {
      ...base,
      baseline_result: pickEnergies(simulated.baseline),
      scenario_result: pickEnergies(simulated.scenario),
    };
  }
  const row = referenceSavings(presets, params.city, params.scenario);
  const savings: SavingsBody = {
    heating_kwh: row.heating_kwh,
    cooling_kwh: row.cooling_kwh,
    lighting_kwh: row.lighting_kwh,
  };
  return { ...base, savings };
}

function pickEnergies(result: SimulationResultJson) {
  return {
    heating_kwh: result.heating_kwh,
    cooling_kwh: result.cooling_kwh,
    lighting_kwh: result.lighting_kwh,
  };
}
