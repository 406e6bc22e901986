import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homebenefits.tariff import (
    PRICE_BOOKS,
    BlockTariff,
    CarrierConsumption,
    FlatTariff,
    NegativeConsumption,
    annual_cost,
    annual_cost_saving,
    get_price_book,
)


def brute_force_block_cost(tariff: BlockTariff, kwh: float) -> float:
    """Independent oracle: accumulate cost one kWh at a time per period.

    Uses exact summation so the oracle itself does not drift over tens of
    thousands of unit steps.
    """
    per_period = kwh / tariff.periods_per_year
    steps = []
    for _ in range(tariff.periods_per_year):
        used = 0.0
        remaining = per_period
        while remaining > 0:
            step = min(1.0, remaining)
            rate = (
                tariff.low_rate_eur_per_kwh
                if used < tariff.threshold_kwh
                else tariff.high_rate_eur_per_kwh
            )
            steps.append(step * rate)
            used += step
            remaining -= step
    return math.fsum(steps)


class TestFlat:
    def test_germany_electricity_example(self):
        book = get_price_book("germany-2019")
        assert book.electricity.cost(1000.0) == pytest.approx(304.80)

    def test_negative_consumption_rejected(self):
        with pytest.raises(NegativeConsumption):
            FlatTariff(0.3).cost(-1.0)

    @given(
        a=st.floats(min_value=0, max_value=1e5),
        b=st.floats(min_value=0, max_value=1e5),
        rate=st.floats(min_value=0, max_value=2),
    )
    def test_flat_cost_is_linear(self, a, b, rate):
        tariff = FlatTariff(rate)
        assert tariff.cost(a + b) == pytest.approx(tariff.cost(a) + tariff.cost(b), abs=1e-9)


class TestBlock:
    def test_below_threshold(self):
        tariff = BlockTariff(125.0, 0.014, 0.033)
        assert tariff.cost(100.0) == pytest.approx(1.40)

    def test_across_threshold_hand_computed(self):
        tariff = BlockTariff(125.0, 0.014, 0.033)
        # 125 * 0.014 + 1000 * 0.033
        assert tariff.cost(1125.0) == pytest.approx(34.75)

    def test_periods_split_consumption_evenly(self):
        annual = BlockTariff(125.0, 0.014, 0.033, periods_per_year=1)
        quarterly = BlockTariff(125.0, 0.014, 0.033, periods_per_year=4)
        # 1000 kWh/a = 250 kWh/quarter: 4 * (125 low + 125 high)
        assert quarterly.cost(1000.0) == pytest.approx(4 * (125 * 0.014 + 125 * 0.033))
        assert quarterly.cost(1000.0) < annual.cost(1000.0) + 1e-12

    def test_invalid_rates_rejected(self):
        with pytest.raises(ValueError):
            BlockTariff(125.0, 0.05, 0.03)
        with pytest.raises(ValueError):
            BlockTariff(0.0, 0.01, 0.03)
        with pytest.raises(ValueError):
            BlockTariff(125.0, -0.01, 0.03)

    @settings(max_examples=200, deadline=None)
    @given(
        threshold=st.integers(min_value=1, max_value=2000),
        low=st.floats(min_value=0, max_value=0.5),
        spread=st.floats(min_value=0, max_value=0.5),
        periods=st.integers(min_value=1, max_value=12),
        kwh=st.floats(min_value=0, max_value=20000),
    )
    def test_closed_form_matches_brute_force(self, threshold, low, spread, periods, kwh):
        tariff = BlockTariff(float(threshold), low, low + spread, periods)
        assert tariff.cost(kwh) == pytest.approx(
            brute_force_block_cost(tariff, kwh), abs=1e-9
        )

    @given(
        a=st.floats(min_value=0, max_value=20000),
        b=st.floats(min_value=0, max_value=20000),
    )
    def test_cost_nondecreasing_in_consumption(self, a, b):
        tariff = BlockTariff(125.0, 0.014, 0.033)
        lo, hi = sorted((a, b))
        assert tariff.cost(lo) <= tariff.cost(hi) + 1e-12


class TestAnnualCostSaving:
    def test_germany_savings_match_hand_computation(self):
        book = get_price_book("germany-2019")
        baseline = CarrierConsumption(electricity_kwh=10_000, gas_kwh=25_000)
        scenario = baseline.minus(2689.0, 7403.0)
        saving = annual_cost_saving(baseline, scenario, book)
        assert saving == pytest.approx(2689 * 0.3048 + 7403 * 0.0609, abs=1e-9)
        assert saving == pytest.approx(1270.45, abs=0.01)

    def test_algeria_savings_valued_at_marginal_rate(self):
        book = get_price_book("algeria-2019")
        baseline = CarrierConsumption(electricity_kwh=10_000, gas_kwh=25_000)
        scenario = baseline.minus(3243.0, 3281.0)
        saving = annual_cost_saving(baseline, scenario, book)
        assert saving == pytest.approx(3243 * 0.033 + 3281 * 0.0024, abs=1e-9)
        assert saving == pytest.approx(114.89, abs=0.01)

    def test_zero_savings_cost_zero(self):
        book = get_price_book("algeria-2019")
        c = CarrierConsumption(electricity_kwh=5000, gas_kwh=9000)
        assert annual_cost_saving(c, c, book) == 0.0

    def test_negative_savings_pass_through(self):
        book = get_price_book("germany-2019")
        baseline = CarrierConsumption(electricity_kwh=1000, gas_kwh=0)
        worse = CarrierConsumption(electricity_kwh=1100, gas_kwh=0)
        assert annual_cost_saving(baseline, worse, book) == pytest.approx(-100 * 0.3048)

    def test_annual_cost_adds_both_carriers(self):
        book = get_price_book("germany-2019")
        c = CarrierConsumption(electricity_kwh=1000, gas_kwh=2000)
        assert annual_cost(c, book) == pytest.approx(1000 * 0.3048 + 2000 * 0.0609)


class TestPresets:
    def test_both_books_ship(self):
        assert set(PRICE_BOOKS) == {"germany-2019", "algeria-2019"}

    def test_unknown_book_lists_valid_names(self):
        with pytest.raises(KeyError, match="algeria-2019, germany-2019"):
            get_price_book("france-2019")
