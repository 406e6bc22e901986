"""Bundled reference rows from the published case study.

These fixtures carry the published annual savings per city and scenario and
the published economic indicators, so the indicator pipeline can be
exercised and cross-checked without running a simulation. Component sums
and printed totals disagree by 1 kWh in one row (rounding in the source);
both are kept.

The published NPV/IRR figures cannot be reproduced exactly under any single
cash-flow convention; the pinned convention here (constant flows,
end-of-year discounting) lands in the same ballpark and the comparison
table makes the residual gap visible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .indicators import EconParams, EnergySavings, IndicatorReport, report_from_savings
from .scenarios import EXTENDED, LOW_COST, get_scenario
from .tariff import CarrierConsumption, get_price_book

# Annual consumption assumed when only savings are injected. Under block
# tariffs any value comfortably above the thresholds gives marginal-rate
# valuation, which is what reproduces the published payback figures.
INJECTION_BASELINE = CarrierConsumption(electricity_kwh=10_000.0, gas_kwh=25_000.0)

CITY_BOOKS = {
    "algiers": "algeria-2019",
    "stuttgart": "germany-2019",
}

CITY_PRESETS = {
    "algiers": "algiers-csa",
    "stuttgart": "stuttgart-cfb",
}


@dataclass(frozen=True)
class ReferenceCase:
    city: str
    scenario: str
    heating_kwh: float
    cooling_kwh: float
    lighting_kwh: float
    total_kwh_printed: float  # as published; may differ from the component sum
    cumulated_mwh_printed: float
    payback_years_printed: float
    npv_eur_printed: float
    irr_pct_printed: float

    @property
    def savings(self) -> EnergySavings:
        return EnergySavings(
            heating_kwh=self.heating_kwh,
            cooling_kwh=self.cooling_kwh,
            lighting_kwh=self.lighting_kwh,
        )

    @property
    def price_book_name(self) -> str:
        return CITY_BOOKS[self.city]

    @property
    def investment_eur(self) -> float:
        return get_scenario(self.scenario).investment_eur


REFERENCE_CASES: tuple[ReferenceCase, ...] = (
    ReferenceCase(
        city="algiers",
        scenario=LOW_COST,
        heating_kwh=3281.0,
        cooling_kwh=3243.0,
        lighting_kwh=0.0,
        total_kwh_printed=6523.0,
        cumulated_mwh_printed=65.0,
        payback_years_printed=2.0 + 4.0 / 12.0,  # ~2 years, 4 months
        npv_eur_printed=834.0,
        irr_pct_printed=50.0,
    ),
    ReferenceCase(
        city="algiers",
        scenario=EXTENDED,
        heating_kwh=3539.0,
        cooling_kwh=6071.0,
        lighting_kwh=1410.0,
        total_kwh_printed=11_020.0,
        cumulated_mwh_printed=110.0,
        payback_years_printed=1.75,  # ~1 year, 9 months
        npv_eur_printed=1969.0,
        irr_pct_printed=58.0,
    ),
    ReferenceCase(
        city="stuttgart",
        scenario=LOW_COST,
        heating_kwh=7403.0,
        cooling_kwh=2689.0,
        lighting_kwh=0.0,
        total_kwh_printed=10_092.0,
        cumulated_mwh_printed=100.0,
        payback_years_printed=2.5 / 12.0,  # ~2.5 months
        npv_eur_printed=15_026.0,
        irr_pct_printed=481.0,
    ),
    ReferenceCase(
        city="stuttgart",
        scenario=EXTENDED,
        heating_kwh=8393.0,
        cooling_kwh=4466.0,
        lighting_kwh=1363.0,
        total_kwh_printed=14_222.0,
        cumulated_mwh_printed=142.0,
        payback_years_printed=2.5 / 12.0,
        npv_eur_printed=23_918.0,
        irr_pct_printed=439.0,
    ),
)


def get_reference_case(city: str, scenario: str) -> ReferenceCase:
    for case in REFERENCE_CASES:
        if case.city == city and case.scenario == scenario:
            return case
    raise KeyError(f"no reference case for ({city}, {scenario})")


def reference_report(
    case: ReferenceCase,
    econ: Optional[EconParams] = None,
    baseline: Optional[CarrierConsumption] = None,
) -> IndicatorReport:
    """Run one reference row through the real indicator pipeline."""
    base_econ = econ or EconParams()
    return report_from_savings(
        savings=case.savings,
        baseline=baseline or INJECTION_BASELINE,
        scenario_name=case.scenario,
        book=get_price_book(case.price_book_name),
        econ=EconParams(
            discount_rate=base_econ.discount_rate,
            horizon_years=base_econ.horizon_years,
            investment_eur=case.investment_eur,
        ),
    )


def reference_comparison(econ: Optional[EconParams] = None) -> list[dict]:
    """Computed-versus-published table for all four reference rows."""
    rows = []
    for case in REFERENCE_CASES:
        report = reference_report(case, econ=econ)
        rows.append(
            {
                "city": case.city,
                "scenario": case.scenario,
                "payback_years": report.payback_years,
                "payback_years_published": case.payback_years_printed,
                "npv_eur": report.npv_eur,
                "npv_eur_published": case.npv_eur_printed,
                "irr_pct": (
                    None
                    if report.irr_per_year is None
                    else report.irr_per_year * 100.0
                ),
                "irr_pct_published": case.irr_pct_printed,
            }
        )
    return rows
