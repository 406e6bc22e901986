"""Homeowner benefit indicators over simulation results and price books.

Covers all four benefit groups: resource (annual and lifetime energy
savings), economic (payback period, net present value, internal rate of
return), social (additional disposable income, i.e. discounted savings
without the investment subtraction) and environmental (per-pollutant
emission savings from specific emission factors of the German electricity
mix, applied to total site kWh regardless of carrier).

Cash-flow convention: constant yearly savings with end-of-year discounting.
No price escalation and no rebound correction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .tariff import CarrierConsumption, PriceBook, annual_cost_saving
from .thermal import SimulationResult

IRR_SEARCH_LOW = -0.99
IRR_SEARCH_HIGH = 1e4  # fraction per year; generous because triple-digit
# percentage returns are realistic for cheap kit
IRR_NPV_TOL_EUR = 1e-6


class ZeroSavings(ValueError):
    """Payback is undefined because annual savings are exactly zero."""


class NeverPaysBack(ValueError):
    """Annual savings are negative; the investment is never recouped."""


@dataclass(frozen=True)
class EconParams:
    discount_rate: float = 0.05  # per year
    horizon_years: int = 10
    investment_eur: float = 0.0

    def __post_init__(self) -> None:
        if self.discount_rate <= -1.0:
            raise ValueError("discount_rate must be > -1")
        if self.horizon_years < 1 or int(self.horizon_years) != self.horizon_years:
            raise ValueError("horizon_years must be an integer >= 1")
        if self.investment_eur < 0:
            raise ValueError("investment must be >= 0")


@dataclass(frozen=True)
class EmissionFactor:
    key: str
    label: str
    unit: str  # mass unit per kWh
    per_kwh: float

    def __post_init__(self) -> None:
        if self.per_kwh < 0:
            raise ValueError("emission factors must be >= 0")


# Specific emission factors of energy use (German electricity mix, 2016).
EMISSION_FACTORS: tuple[EmissionFactor, ...] = (
    EmissionFactor("so2", "Sulfur dioxide", "g", 0.290),
    EmissionFactor("no2", "Nitrogen dioxide", "g", 0.440),
    EmissionFactor("pm", "Particulate matter", "g", 0.017),
    EmissionFactor("pm10", "PM10", "g", 0.015),
    EmissionFactor("co", "Carbon monoxide", "g", 0.230),
    EmissionFactor("co2", "CO2", "kg", 0.516),
    EmissionFactor("no", "NO", "g", 0.013),
    EmissionFactor("ch4", "Methane", "g", 0.184),
    EmissionFactor("voc", "Volatile organic compounds", "g", 0.017),
    EmissionFactor("hg", "Mercury", "mg", 0.010),
)


@dataclass(frozen=True)
class EnergySavings:
    """Annual energy savings by end use, in kWh; negative values allowed."""

    heating_kwh: float = 0.0
    cooling_kwh: float = 0.0
    lighting_kwh: float = 0.0

    @property
    def electricity_kwh(self) -> float:
        return self.cooling_kwh + self.lighting_kwh

    @property
    def gas_kwh(self) -> float:
        return self.heating_kwh

    @property
    def total_kwh(self) -> float:
        return self.heating_kwh + self.cooling_kwh + self.lighting_kwh


def consumption_of(result: SimulationResult) -> CarrierConsumption:
    """Map end uses to carriers: heating is gas, the rest electricity."""
    return CarrierConsumption(
        electricity_kwh=result.cooling_kwh + result.lighting_kwh,
        gas_kwh=result.heating_kwh,
    )


def annual_energy_savings(e_ref: SimulationResult, e_i: SimulationResult) -> EnergySavings:
    """Per-end-use annual savings of a scenario against the reference."""
    return EnergySavings(
        heating_kwh=e_ref.heating_kwh - e_i.heating_kwh,
        cooling_kwh=e_ref.cooling_kwh - e_i.cooling_kwh,
        lighting_kwh=e_ref.lighting_kwh - e_i.lighting_kwh,
    )


def lifetime_energy_savings(annual_kwh: float, horizon_years: int) -> float:
    """Savings cumulated over the lifetime, constant per-year contribution."""
    if horizon_years < 1:
        raise ValueError("horizon_years must be >= 1")
    return annual_kwh * horizon_years


def payback_period(investment_eur: float, annual_saving_eur: float) -> float:
    """Years to recoup the investment from constant annual savings."""
    if annual_saving_eur == 0.0:
        raise ZeroSavings("annual cost savings are zero")
    if annual_saving_eur < 0.0:
        raise NeverPaysBack("annual cost savings are negative")
    return investment_eur / annual_saving_eur


def net_present_value(
    investment_eur: float, flows_eur: Sequence[float], discount_rate: float
) -> float:
    """Discounted savings minus investment, end-of-year discounting."""
    if len(flows_eur) < 1:
        raise ValueError("at least one yearly flow is required")
    pv = 0.0
    for t, flow in enumerate(flows_eur, start=1):
        pv += flow / (1.0 + discount_rate) ** t
    return pv - investment_eur


def additional_disposable_income(
    flows_eur: Sequence[float], discount_rate: float
) -> float:
    """Discounted savings with no investment subtraction (cost covered by
    subsidies or social benefits)."""
    return net_present_value(0.0, flows_eur, discount_rate)


def internal_rate_of_return(
    investment_eur: float, flows_eur: Sequence[float]
) -> Optional[float]:
    """Rate at which the NPV of the flows reaches zero, or None.

    Bracketing plus bisection on [-99%, 10^6%]; the solution satisfies
    |NPV| < 1e-6 EUR. Returns None when no sign change exists in the
    bracket (for example a zero investment with positive savings).
    """

    if investment_eur == 0.0 and all(flow == 0.0 for flow in flows_eur):
        return None  # NPV is identically zero; no informative rate exists

    def f(rate: float) -> float:
        return net_present_value(investment_eur, flows_eur, rate)

    lo, hi = IRR_SEARCH_LOW, IRR_SEARCH_HIGH
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        return None
    for _ in range(500):
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if abs(f_mid) < IRR_NPV_TOL_EUR:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
        if hi - lo <= 1e-14 * max(1.0, abs(lo)):
            return mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class PollutantSaving:
    key: str
    label: str
    unit: str
    annual: float
    lifetime: float


def emission_savings(
    annual_kwh: float,
    horizon_years: int,
    factors: Sequence[EmissionFactor] = EMISSION_FACTORS,
) -> tuple[PollutantSaving, ...]:
    """Per-pollutant mass savings; negative energy passes through signed."""
    lifetime_kwh = annual_kwh * horizon_years
    return tuple(
        PollutantSaving(
            key=fac.key,
            label=fac.label,
            unit=fac.unit,
            annual=fac.per_kwh * annual_kwh,
            lifetime=fac.per_kwh * lifetime_kwh,
        )
        for fac in factors
    )


PAYBACK_OK = "ok"
PAYBACK_ZERO_SAVINGS = "zero-savings"
PAYBACK_NEVER = "never-pays-back"


@dataclass(frozen=True)
class IndicatorReport:
    scenario: str
    savings: EnergySavings
    horizon_years: int
    discount_rate: float
    investment_eur: float
    annual_cost_saving_eur: float
    payback_years: Optional[float]
    payback_status: str
    npv_eur: float
    irr_per_year: Optional[float]
    adi_eur: float
    emissions: tuple[PollutantSaving, ...]

    @property
    def delta_e_annual_kwh(self) -> float:
        return self.savings.total_kwh

    @property
    def delta_e_lifetime_kwh(self) -> float:
        return self.savings.total_kwh * self.horizon_years

    @property
    def degenerate(self) -> bool:
        return self.payback_status != PAYBACK_OK

    def to_json_dict(self) -> dict:
        """Serializable report with fixed field order and fixed rounding:
        2 decimals for EUR, 0 for kWh, 3 for rates and years."""
        return {
            "scenario": self.scenario,
            "delta_e_annual_kwh": round(self.delta_e_annual_kwh),
            "delta_e_lifetime_kwh": round(self.delta_e_lifetime_kwh),
            "delta_e_annual_by_use_kwh": {
                "heating": round(self.savings.heating_kwh),
                "cooling": round(self.savings.cooling_kwh),
                "lighting": round(self.savings.lighting_kwh),
            },
            "annual_cost_saving_eur": round(self.annual_cost_saving_eur, 2),
            "investment_eur": round(self.investment_eur, 2),
            "payback_years": (
                None if self.payback_years is None else round(self.payback_years, 3)
            ),
            "payback_status": self.payback_status,
            "npv_eur": round(self.npv_eur, 2),
            "irr_per_year": (
                None if self.irr_per_year is None else round(self.irr_per_year, 3)
            ),
            "adi_eur": round(self.adi_eur, 2),
            "discount_rate": round(self.discount_rate, 3),
            "horizon_years": self.horizon_years,
            "emissions": {
                p.key: {
                    "label": p.label,
                    "unit": p.unit,
                    "annual": round(p.annual, 3),
                    "lifetime": round(p.lifetime, 3),
                }
                for p in self.emissions
            },
        }

    def to_csv_rows(self) -> list[list[str]]:
        """Long-format rows: one per pollutant plus a summary block."""
        rows = [
            ["indicator", "value", "unit"],
            ["delta_e_annual", f"{self.delta_e_annual_kwh:.0f}", "kWh/a"],
            ["delta_e_lifetime", f"{self.delta_e_lifetime_kwh:.0f}", "kWh"],
            ["annual_cost_saving", f"{self.annual_cost_saving_eur:.2f}", "EUR/a"],
            ["investment", f"{self.investment_eur:.2f}", "EUR"],
            [
                "payback",
                "" if self.payback_years is None else f"{self.payback_years:.3f}",
                "a",
            ],
            ["npv", f"{self.npv_eur:.2f}", "EUR"],
            [
                "irr",
                "" if self.irr_per_year is None else f"{self.irr_per_year:.3f}",
                "1/a",
            ],
            ["adi", f"{self.adi_eur:.2f}", "EUR"],
        ]
        for p in self.emissions:
            rows.append([f"{p.key}_annual", f"{p.annual:.3f}", f"{p.unit}/a"])
            rows.append([f"{p.key}_lifetime", f"{p.lifetime:.3f}", p.unit])
        return rows


def report_from_savings(
    savings: EnergySavings,
    baseline: CarrierConsumption,
    scenario_name: str,
    book: PriceBook,
    econ: EconParams,
) -> IndicatorReport:
    """Assemble the full report from annual savings and the baseline bill.

    The baseline consumption matters under block tariffs: it decides which
    rate the saved kilowatt-hours are valued at.
    """
    scenario_consumption = baseline.minus(savings.electricity_kwh, savings.gas_kwh)
    delta_oc = annual_cost_saving(baseline, scenario_consumption, book)
    flows = [delta_oc] * econ.horizon_years

    payback: Optional[float]
    try:
        payback = payback_period(econ.investment_eur, delta_oc)
        status = PAYBACK_OK
    except ZeroSavings:
        payback = None
        status = PAYBACK_ZERO_SAVINGS
    except NeverPaysBack:
        payback = None
        status = PAYBACK_NEVER

    return IndicatorReport(
        scenario=scenario_name,
        savings=savings,
        horizon_years=econ.horizon_years,
        discount_rate=econ.discount_rate,
        investment_eur=econ.investment_eur,
        annual_cost_saving_eur=delta_oc,
        payback_years=payback,
        payback_status=status,
        npv_eur=net_present_value(econ.investment_eur, flows, econ.discount_rate),
        irr_per_year=internal_rate_of_return(econ.investment_eur, flows),
        adi_eur=additional_disposable_income(flows, econ.discount_rate),
        emissions=emission_savings(savings.total_kwh, econ.horizon_years),
    )


def full_report(
    e_ref: SimulationResult,
    e_i: SimulationResult,
    scenario_name: str,
    investment_eur: float,
    book: PriceBook,
    econ: Optional[EconParams] = None,
) -> IndicatorReport:
    """Full indicator set for a scenario run against its reference run."""
    base_econ = econ or EconParams()
    econ_used = EconParams(
        discount_rate=base_econ.discount_rate,
        horizon_years=base_econ.horizon_years,
        investment_eur=investment_eur,
    )
    return report_from_savings(
        savings=annual_energy_savings(e_ref, e_i),
        baseline=consumption_of(e_ref),
        scenario_name=scenario_name,
        book=book,
        econ=econ_used,
    )
