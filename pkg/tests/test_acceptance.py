"""Acceptance suite: one test per criterion, at its stated tolerance.

Each test prints one `ACCEPTANCE n: PASS` line (visible with -s or -rA);
a failed criterion shows up as a failed test. Criterion 10 (UI parity) is
covered by the frontend's own test suite and intentionally has no test
here; criteria 1 to 9 run with no UI built.
"""

import math
import random
import time

import numpy as np
import pytest

from homebenefits.benchmarks import (
    REFERENCE_CASES,
    get_reference_case,
    reference_comparison,
    reference_report,
)
from homebenefits.cli import main as cli_main
from homebenefits.indicators import (
    additional_disposable_income,
    annual_energy_savings,
    internal_rate_of_return,
    net_present_value,
)
from homebenefits.occupancy import build_profile
from homebenefits.scenarios import scenario_catalog
from homebenefits.tariff import BlockTariff, get_price_book
from homebenefits.thermal import (
    BuildingParams,
    hourly_gains_w,
    simulate_year,
    step_energy_residual,
)
from homebenefits.weather import PRESETS, synthesize_weather


def months(years: float) -> float:
    return years * 12.0


def test_criterion_01_payback_reproduction_tight():
    # low-cost rows, +/-5% against the published paybacks
    stuttgart = reference_report(get_reference_case("stuttgart", "low-cost"))
    assert stuttgart.payback_years == pytest.approx(0.212, abs=0.002)
    assert months(stuttgart.payback_years) == pytest.approx(2.5, rel=0.05)

    algiers = reference_report(get_reference_case("algiers", "low-cost"))
    assert algiers.payback_years == pytest.approx(2.34, abs=0.01)
    assert algiers.payback_years == pytest.approx(2.0 + 4.0 / 12.0, rel=0.05)
    print(
        "\nACCEPTANCE 1: PASS - payback tight: "
        f"stuttgart low-cost {months(stuttgart.payback_years):.2f} months (ref 2.5), "
        f"algiers low-cost {algiers.payback_years:.3f} a (ref 2.333)"
    )


def test_criterion_02_payback_reproduction_loose():
    # extended rows, +/-20%; the residual gap is rounding in the published
    # savings and payback figures
    stuttgart = reference_report(get_reference_case("stuttgart", "extended"))
    assert months(stuttgart.payback_years) == pytest.approx(2.5, rel=0.20)

    algiers = reference_report(get_reference_case("algiers", "extended"))
    assert algiers.payback_years == pytest.approx(1.75, rel=0.20)
    print(
        "ACCEPTANCE 2: PASS - payback loose: "
        f"stuttgart extended {months(stuttgart.payback_years):.2f} months (ref 2.5), "
        f"algiers extended {algiers.payback_years:.3f} a (ref 1.75)"
    )


def test_criterion_03_lifetime_savings_reproduce_cumulated_column():
    # published cumulated column is truncated to whole MWh (the stuttgart
    # low-cost row is 100.92 computed vs 100 printed), so assert the
    # truncation match and stay within one unit of the printed value
    for case in REFERENCE_CASES:
        computed_mwh = case.total_kwh_printed * 10.0 / 1000.0
        assert math.floor(computed_mwh) == case.cumulated_mwh_printed
        assert abs(computed_mwh - case.cumulated_mwh_printed) < 1.0
    print("ACCEPTANCE 3: PASS - lifetime savings match 65 / 110 / 100 / 142 MWh")


def test_criterion_04_co2_figures_with_documented_city_swap():
    # published prose: "7.3 t (Algiers) and 5.7 t (Stuttgart)"; the savings
    # table times the factor table gives exactly those masses with the city
    # labels swapped, an apparent erratum that is asserted here
    algiers = reference_report(get_reference_case("algiers", "extended"))
    stuttgart = reference_report(get_reference_case("stuttgart", "extended"))
    algiers_t = {p.key: p for p in algiers.emissions}["co2"].annual / 1000.0
    stuttgart_t = {p.key: p for p in stuttgart.emissions}["co2"].annual / 1000.0

    assert algiers_t == pytest.approx(5.69, abs=0.005)
    assert stuttgart_t == pytest.approx(7.34, abs=0.005)
    # the swap: the computed algiers mass matches the published stuttgart
    # figure and vice versa, both within 2%
    assert algiers_t == pytest.approx(5.7, rel=0.02)
    assert stuttgart_t == pytest.approx(7.3, rel=0.02)
    assert not algiers_t == pytest.approx(7.3, rel=0.02)
    assert not stuttgart_t == pytest.approx(5.7, rel=0.02)
    print(
        "ACCEPTANCE 4: PASS - CO2 savings "
        f"algiers {algiers_t:.2f} t/a, stuttgart {stuttgart_t:.2f} t/a "
        "(published 7.3/5.7 with city labels swapped)"
    )


def test_criterion_05_npv_irr_nonreproducibility_is_explicit(capsys):
    # under the pinned convention (constant flows, end-of-year discounting,
    # r = 5%) the published NPV/IRR figures are not exactly recoverable; the
    # contract is same sign, NPV within a factor of 2, IRR within 15
    # percentage points, and a visible comparison table
    rows = reference_comparison()
    assert len(rows) == 4
    for row in rows:
        npv, npv_ref = row["npv_eur"], row["npv_eur_published"]
        assert npv != pytest.approx(npv_ref, rel=1e-3)  # gap is real
        assert (npv > 0) == (npv_ref > 0)
        assert 0.5 <= npv / npv_ref <= 2.0
        irr, irr_ref = row["irr_pct"], row["irr_pct_published"]
        assert abs(irr - irr_ref) <= 15.0

    exit_code = cli_main(["indicators", "--paper-fixtures", "--format", "csv"])
    table = capsys.readouterr().out
    assert exit_code == 0
    assert len(table.strip().splitlines()) == 5
    assert "npv_eur_published" in table
    ratios = ", ".join(
        "{:.2f}".format(r["npv_eur"] / r["npv_eur_published"]) for r in rows
    )
    print(
        f"ACCEPTANCE 5: PASS - NPV within factor 2 (ratios {ratios}), "
        "IRR within 15 percentage points; comparison table emitted"
    )


def test_criterion_06_finance_properties():
    rng = random.Random(20190423)

    # NPV(r=0) is the undiscounted sum, exactly
    for _ in range(50):
        flow = rng.uniform(1.0, 5000.0)
        years = rng.randint(1, 30)
        inv = rng.uniform(0.0, 10_000.0)
        assert net_present_value(inv, [flow] * years, 0.0) == pytest.approx(
            flow * years - inv, abs=1e-9
        )

    # NPV strictly decreasing in r for positive flows
    for _ in range(200):
        flow = rng.uniform(1.0, 5000.0)
        years = rng.randint(1, 30)
        inv = rng.uniform(0.0, 10_000.0)
        r1, r2 = sorted((rng.uniform(-0.5, 5.0), rng.uniform(-0.5, 5.0)))
        if r2 - r1 < 1e-9:
            continue
        flows = [flow] * years
        assert net_present_value(inv, flows, r1) > net_present_value(inv, flows, r2)

    # |NPV(IRR)| < 1e-6 EUR
    for _ in range(200):
        flow = rng.uniform(1.0, 5000.0)
        years = rng.randint(1, 30)
        inv = flow * rng.uniform(0.1, min(10.0, years * 0.9))
        flows = [flow] * years
        irr = internal_rate_of_return(inv, flows)
        assert irr is not None
        assert abs(net_present_value(inv, flows, irr)) < 1e-6

    # ADI - NPV = investment (exact to double precision)
    for _ in range(100):
        flow = rng.uniform(0.0, 5000.0)
        years = rng.randint(1, 30)
        inv = rng.uniform(0.0, 10_000.0)
        r = rng.uniform(0.0, 1.0)
        flows = [flow] * years
        adi = additional_disposable_income(flows, r)
        npv = net_present_value(inv, flows, r)
        assert adi - npv == pytest.approx(inv, abs=1e-9)

    # a constructed fixed point returns the construction rate
    rate = 0.05
    flows = [100.0] * 10
    inv = sum(100.0 / (1 + rate) ** t for t in range(1, 11))
    assert internal_rate_of_return(inv, flows) == pytest.approx(rate, abs=1e-6)
    print("ACCEPTANCE 6: PASS - finance identities and IRR fixed point hold")


def test_criterion_07_block_tariff_oracle():
    def brute_force(tariff: BlockTariff, kwh: float) -> float:
        per_period = kwh / tariff.periods_per_year
        steps = []
        for _ in range(tariff.periods_per_year):
            used, remaining = 0.0, per_period
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

    rng = random.Random(125)
    algeria = get_price_book("algeria-2019")
    tariffs = [
        algeria.electricity,
        algeria.gas,
        BlockTariff(500.0, 0.02, 0.09, periods_per_year=4),
    ]
    worst = 0.0
    for tariff in tariffs:
        for _ in range(1000):
            kwh = rng.uniform(0.0, 30_000.0)
            diff = abs(tariff.cost(kwh) - brute_force(tariff, kwh))
            worst = max(worst, diff)
            assert diff < 1e-9
    print(f"ACCEPTANCE 7: PASS - block tariff vs brute force, worst gap {worst:.2e} EUR")


def test_criterion_08_simulation_ordinal_patterns(default_profile):
    params = BuildingParams()
    start = time.perf_counter()
    runs = {}
    for city, preset in (("stuttgart", "stuttgart-cfb"), ("algiers", "algiers-csa")):
        weather = synthesize_weather(PRESETS[preset], seed=42)
        for spec in scenario_catalog():
            runs[(city, spec.name)] = simulate_year(
                weather, default_profile, spec.policy, params
            )
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0

    for city in ("stuttgart", "algiers"):
        base = runs[(city, "baseline")]
        low = runs[(city, "low-cost")]
        ext = runs[(city, "extended")]
        sav_low = annual_energy_savings(base, low)
        sav_ext = annual_energy_savings(base, ext)
        assert sav_ext.total_kwh >= sav_low.total_kwh >= 0.0
        assert sav_low.total_kwh > 0.0
        assert sav_low.lighting_kwh == 0.0
        assert sav_ext.lighting_kwh > 0.0

    assert runs[("stuttgart", "baseline")].heating_kwh > runs[("algiers", "baseline")].heating_kwh
    assert runs[("algiers", "baseline")].cooling_kwh > runs[("stuttgart", "baseline")].cooling_kwh

    # per-step energy balance on a traced run in each city
    for city, preset in (("stuttgart", "stuttgart-cfb"), ("algiers", "algiers-csa")):
        weather = synthesize_weather(PRESETS[preset], seed=42)
        policy = scenario_catalog()[2].policy
        result = simulate_year(weather, default_profile, policy, params, keep_trace=True)
        t_prev = policy.heat_setpoint
        for h in range(len(weather)):
            gains = hourly_gains_w(weather[h], default_profile[h], params)
            q_hvac = result.trace["heat_wh"][h] - result.trace["cool_wh"][h]
            res = step_energy_residual(
                t_prev, result.trace["temp_c"][h], weather[h].outdoor_temp,
                gains + q_hvac, params,
            )
            assert res < 1e-6
            t_prev = result.trace["temp_c"][h]
    print(
        "ACCEPTANCE 8: PASS - savings ordering, lighting pattern, climate "
        f"ordering, energy balance; 6 runs in {elapsed:.2f} s"
    )


def test_criterion_09_calibration_anchor(default_profile):
    weather = synthesize_weather(PRESETS["stuttgart-cfb"], seed=42)
    baseline = simulate_year(
        weather, default_profile, scenario_catalog()[0].policy, BuildingParams()
    )
    site_excl_cooling = baseline.heating_kwh + baseline.lighting_kwh
    assert site_excl_cooling == pytest.approx(30_200.0, rel=0.15)
    print(
        f"ACCEPTANCE 9: PASS - stuttgart baseline {site_excl_cooling:.0f} kWh/a "
        "site energy excluding cooling, within 15% of 30200"
    )
