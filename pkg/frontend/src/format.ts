/** Every display rule lives here: EUR with 2 decimals, whole kWh, payback
 * converted to months below one year, mass units scaled for readability.
 * All functions format service-response values verbatim; the only
 * transformations are unit conversions. */

export function formatEur(value: number): string {
  return `${value.toFixed(2)} €`;
}

export function formatKwh(value: number): string {
  return `${Math.round(value).toLocaleString("en-US")} kWh`;
}

export function formatKwhPerYear(value: number): string {
  return `${Math.round(value).toLocaleString("en-US")} kWh/a`;
}

export function formatPayback(years: number | null, status: string): string {
  if (years === null) {
    return status === "never-pays-back" ? "never pays back" : "no savings";
  }
  if (years < 1.0) {
    return `≈ ${(years * 12).toFixed(1)} months`;
  }
  return `≈ ${years.toFixed(2)} years`;
}

export function formatRate(ratePerYear: number | null): string {
  if (ratePerYear === null) {
    return "not defined";
  }
  return `${(ratePerYear * 100).toFixed(1)} %/a`;
}

export function formatPercent(fraction: number): string {
  return `${(fraction * 100).toFixed(1)} %`;
}

/** Mass in the table's native unit, promoted to tonnes above 1000 kg. */
export function formatMass(value: number, unit: string, perYear: boolean): string {
  const suffix = perYear ? "/a" : "";
  if (unit === "kg" && Math.abs(value) >= 1000) {
    return `${(value / 1000).toFixed(2)} t${suffix}`;
  }
  const decimals = Math.abs(value) >= 100 ? 0 : Math.abs(value) >= 1 ? 1 : 3;
  return `${value.toFixed(decimals)} ${unit}${suffix}`;
}

export function formatYears(years: number): string {
  return `${years} a`;
}
