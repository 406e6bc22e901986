"""Energy pricing under flat and increasing-block tariffs.

Germany prices both carriers flat. Algeria uses increasing-block pricing:
consumption within a per-billing-period threshold is charged a low
subsidized rate and the remainder a higher rate. Savings are valued as the
difference of annual bills, which automatically prices them at the marginal
(high) rate while consumption stays above the threshold.

Billing periods default to one per year; the split across periods is even,
which is exact for the constant-consumption accounting used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


class NegativeConsumption(ValueError):
    pass


@dataclass(frozen=True)
class FlatTariff:
    rate_eur_per_kwh: float

    def __post_init__(self) -> None:
        if self.rate_eur_per_kwh < 0:
            raise ValueError("rate must be >= 0")

    def cost(self, kwh: float) -> float:
        if kwh < 0:
            raise NegativeConsumption(f"consumption must be >= 0, got {kwh}")
        return self.rate_eur_per_kwh * kwh


@dataclass(frozen=True)
class BlockTariff:
    threshold_kwh: float  # per billing period
    low_rate_eur_per_kwh: float
    high_rate_eur_per_kwh: float
    periods_per_year: int = 1

    def __post_init__(self) -> None:
        if self.threshold_kwh <= 0:
            raise ValueError("threshold must be > 0")
        if self.low_rate_eur_per_kwh < 0 or self.high_rate_eur_per_kwh < 0:
            raise ValueError("rates must be >= 0")
        if self.low_rate_eur_per_kwh > self.high_rate_eur_per_kwh:
            raise ValueError("low rate must not exceed high rate")
        if self.periods_per_year < 1:
            raise ValueError("periods_per_year must be >= 1")

    def cost(self, kwh: float) -> float:
        if kwh < 0:
            raise NegativeConsumption(f"consumption must be >= 0, got {kwh}")
        per_period = kwh / self.periods_per_year
        low_part = min(per_period, self.threshold_kwh)
        high_part = max(0.0, per_period - self.threshold_kwh)
        return self.periods_per_year * (
            low_part * self.low_rate_eur_per_kwh
            + high_part * self.high_rate_eur_per_kwh
        )


TariffStructure = Union[FlatTariff, BlockTariff]


@dataclass(frozen=True)
class PriceBook:
    """One tariff per carrier for one country/regime."""

    country: str
    electricity: TariffStructure
    gas: TariffStructure


@dataclass(frozen=True)
class CarrierConsumption:
    """Annual site consumption by carrier, in kWh."""

    electricity_kwh: float = 0.0
    gas_kwh: float = 0.0

    def __post_init__(self) -> None:
        if self.electricity_kwh < 0 or self.gas_kwh < 0:
            raise NegativeConsumption("consumption must be >= 0 for both carriers")

    def minus(self, savings_electricity_kwh: float, savings_gas_kwh: float) -> "CarrierConsumption":
        """Consumption after subtracting savings, floored at zero."""
        return CarrierConsumption(
            electricity_kwh=max(0.0, self.electricity_kwh - savings_electricity_kwh),
            gas_kwh=max(0.0, self.gas_kwh - savings_gas_kwh),
        )


PRICE_BOOKS: dict[str, PriceBook] = {
    "germany-2019": PriceBook(
        country="germany-2019",
        electricity=FlatTariff(rate_eur_per_kwh=0.3048),
        gas=FlatTariff(rate_eur_per_kwh=0.0609),
    ),
    # Gas threshold: the published figure carries an obvious unit misprint
    # (TWh); 1125 kWh per billing period is the only household-scale reading.
    "algeria-2019": PriceBook(
        country="algeria-2019",
        electricity=BlockTariff(
            threshold_kwh=125.0,
            low_rate_eur_per_kwh=0.014,
            high_rate_eur_per_kwh=0.033,
        ),
        gas=BlockTariff(
            threshold_kwh=1125.0,
            low_rate_eur_per_kwh=0.0012,
            high_rate_eur_per_kwh=0.0024,
        ),
    ),
}


def annual_cost(consumption: CarrierConsumption, book: PriceBook) -> float:
    """Total annual bill across both carriers, in EUR."""
    return book.electricity.cost(consumption.electricity_kwh) + book.gas.cost(
        consumption.gas_kwh
    )


def annual_cost_saving(
    baseline: CarrierConsumption, scenario: CarrierConsumption, book: PriceBook
) -> float:
    """Annual bill reduction of a scenario against the baseline, in EUR.

    Negative values (a scenario that consumes more) are reported as-is.
    """
    return annual_cost(baseline, book) - annual_cost(scenario, book)


def get_price_book(name: str) -> PriceBook:
    try:
        return PRICE_BOOKS[name]
    except KeyError:
        valid = ", ".join(sorted(PRICE_BOOKS))
        raise KeyError(f"unknown price book '{name}' (valid: {valid})") from None
