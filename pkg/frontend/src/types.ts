/** Shapes of the /api/v1 JSON payloads. */

export interface PollutantSaving {
  label: string;
  unit: string;
  annual: number;
  lifetime: number;
}

export interface IndicatorReportJson {
  scenario: string;
  delta_e_annual_kwh: number;
  delta_e_lifetime_kwh: number;
  delta_e_annual_by_use_kwh: { heating: number; cooling: number; lighting: number };
  annual_cost_saving_eur: number;
  investment_eur: number;
  payback_years: number | null;
  payback_status: string;
  npv_eur: number;
  irr_per_year: number | null;
  adi_eur: number;
  discount_rate: number;
  horizon_years: number;
  emissions: Record<string, PollutantSaving>;
}

export interface IndicatorsResponse {
  engine_version: string;
  config: unknown;
  report: IndicatorReportJson;
}

export interface SimulationResultJson {
  engine_version: string;
  weather: string;
  scenario: string;
  seed: number;
  heating_kwh: number;
  cooling_kwh: number;
  lighting_kwh: number;
  electricity_kwh: number;
  gas_kwh: number;
  total_kwh: number;
}

export interface SimulateResponse {
  engine_version: string;
  config: unknown;
  result: SimulationResultJson;
}

export interface FlatTariffJson {
  type: "flat";
  rate_eur_per_kwh: number;
}

export interface BlockTariffJson {
  type: "block";
  threshold_kwh: number;
  low_rate_eur_per_kwh: number;
  high_rate_eur_per_kwh: number;
  periods_per_year: number;
}

export type TariffJson = FlatTariffJson | BlockTariffJson;

export interface PriceBookJson {
  country: string;
  electricity: TariffJson;
  gas: TariffJson;
}

export interface ScenarioJson {
  name: string;
  investment_eur: number;
  devices: string[];
  policy: Record<string, unknown>;
}

export interface CityJson {
  name: string;
  weather_preset: string;
  price_book: string;
}

export interface ReferenceSavingsJson {
  city: string;
  scenario: string;
  heating_kwh: number;
  cooling_kwh: number;
  lighting_kwh: number;
}

export interface PresetsResponse {
  engine_version: string;
  weather_presets: Record<string, unknown>;
  price_books: Record<string, PriceBookJson>;
  scenarios: ScenarioJson[];
  emission_factors: { key: string; label: string; unit: string; per_kwh: number }[];
  cities: CityJson[];
  reference_savings: ReferenceSavingsJson[];
  defaults: {
    seed: number;
    econ: { discount_rate: number; horizon_years: number; investment_eur: number };
  };
}

export interface SavingsBody {
  heating_kwh: number;
  cooling_kwh: number;
  lighting_kwh: number;
}

export interface EconBody {
  discount_rate: number;
  horizon_years: number;
  investment_eur: number;
}

export interface IndicatorsRequest {
  savings?: SavingsBody;
  baseline_result?: Partial<SimulationResultJson>;
  scenario_result?: Partial<SimulationResultJson>;
  price_book: string | Omit<PriceBookJson, "country">;
  scenario?: string;
  econ: EconBody;
}

export interface SimulateRequest {
  preset: string;
  scenario: string;
  seed?: number;
}

export interface ApiErrorBody {
  engine_version: string;
  error: { status: number; message: string; fields: string[] };
}
