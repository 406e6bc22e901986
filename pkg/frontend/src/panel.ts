/** View-model builders: turn a service report into the four benefit groups.
 * Pure data in, pure data out; the DOM layer just prints these values, which
 * keeps the rendered-number-equals-response-field contract testable. */

import {
  formatEur,
  formatKwh,
  formatKwhPerYear,
  formatMass,
  formatPayback,
  formatPercent,
  formatRate,
} from "./format.js";
import type { ComparisonEntry } from "./controller.js";
import type { IndicatorReportJson } from "./types.js";

export interface Card {
  label: string;
  value: string;
  detail?: string;
}

export interface BenefitGroup {
  title: string;
  cards: Card[];
}

export function buildBenefitPanel(report: IndicatorReportJson): BenefitGroup[] {
  const byUse = report.delta_e_annual_by_use_kwh;
  const co2 = report.emissions["co2"];
  const groups: BenefitGroup[] = [
    {
      title: "Resources",
      cards: [
        {
          label: "Annual energy savings",
          value: formatKwhPerYear(report.delta_e_annual_kwh),
          detail: `heating ${formatKwh(byUse.heating)}, cooling ${formatKwh(
            byUse.cooling,
          )}, lighting ${formatKwh(byUse.lighting)}`,
        },
        {
          label: `Lifetime savings (${report.horizon_years} a)`,
          value: formatKwh(report.delta_e_lifetime_kwh),
        },
      ],
    },
    {
      title: "Economic",
      cards: [
        {
          label: "Payback period",
          value: formatPayback(report.payback_years, report.payback_status),
          detail: `investment ${formatEur(report.investment_eur)}`,
        },
        {
          label: "Net present value",
          value: formatEur(report.npv_eur),
          detail: `discount rate ${formatPercent(report.discount_rate)}`,
        },
        {
          label: "Internal rate of return",
          value: formatRate(report.irr_per_year),
        },
        {
          label: "Annual cost saving",
          value: `${formatEur(report.annual_cost_saving_eur)}/a`,
        },
      ],
    },
    {
      title: "Social",
      cards: [
        {
          label: "Additional disposable income",
          value: formatEur(report.adi_eur),
          detail: "discounted savings with the investment covered by subsidies",
        },
      ],
    },
    {
      title: "Environmental",
      cards: buildEmissionCards(report),
    },
  ];
  if (co2 === undefined) {
    throw new Error("report is missing the co2 emission row");
  }
  return groups;
}

function buildEmissionCards(report: IndicatorReportJson): Card[] {
  const cards: Card[] = [];
  for (const [key, row] of Object.entries(report.emissions)) {
    cards.push({
      label: row.label,
      value: formatMass(row.annual, row.unit, true),
      detail: `${formatMass(row.lifetime, row.unit, false)} over ${
        report.horizon_years
      } a`,
    });
    if (key === "co2") {
      // keep the headline gas first
      cards.unshift(cards.pop()!);
    }
  }
  return cards;
}

export function buildErrorCard(message: string): Card {
  return { label: "Service error", value: message };
}

export interface ComparisonBar {
  city: string;
  adiLabel: string;
  adiEur: number;
  co2Label: string;
  co2AnnualKg: number;
}

/** Data behind the side-by-side city bars (disposable income and CO2). */
export function buildComparison(entries: ComparisonEntry[]): ComparisonBar[] {
  return entries.map(({ city, report }) => {
    const co2 = report.emissions["co2"];
    if (co2 === undefined) {
      throw new Error("report is missing the co2 emission row");
    }
    return {
      city,
      adiLabel: formatEur(report.adi_eur),
      adiEur: report.adi_eur,
      co2Label: formatMass(co2.annual, co2.unit, true),
      co2AnnualKg: co2.annual,
    };
  });
}
