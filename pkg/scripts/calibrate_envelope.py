#!/usr/bin/env python3
"""Sweep the envelope loss coefficient and solar aperture against the
30.2 MWh/a consumption anchor (Stuttgart baseline, site energy excluding
cooling) and print the landscape. Used once to pick the frozen defaults in
BuildingParams; rerun after touching the weather synthesis or the zone
model.
"""

import argparse
from dataclasses import replace

from homebenefits.occupancy import build_profile
from homebenefits.scenarios import get_scenario
from homebenefits.thermal import BuildingParams, simulate_year
from homebenefits.weather import PRESETS, synthesize_weather

ANCHOR_KWH = 30_200.0


def site_energy_excl_cooling(params: BuildingParams, seed: int) -> float:
    weather = synthesize_weather(PRESETS["stuttgart-cfb"], seed=seed)
    profile = build_profile(seed=seed)
    result = simulate_year(weather, profile, get_scenario("baseline").policy, params)
    return result.heating_kwh + result.lighting_kwh


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--seeds", type=int, default=1, help="extra seeds to average")
    args = parser.parse_args()

    base = BuildingParams()
    print(f"anchor: {ANCHOR_KWH:.0f} kWh/a, band +/-15% = "
          f"[{ANCHOR_KWH * 0.85:.0f}, {ANCHOR_KWH * 1.15:.0f}]")
    print(f"{'ua W/K':>8} {'window m2':>10} {'site kWh/a':>12} {'dev %':>7}")
    for ua in (260.0, 280.0, 300.0, 320.0, 340.0):
        for window in (5.0, 6.0, 7.0):
            params = replace(base, ua=ua, window_solar_area=window)
            values = [
                site_energy_excl_cooling(params, args.seed + k)
                for k in range(args.seeds)
            ]
            site = sum(values) / len(values)
            dev = 100.0 * (site - ANCHOR_KWH) / ANCHOR_KWH
            marker = " <= current" if ua == base.ua and window == base.window_solar_area else ""
            print(f"{ua:8.0f} {window:10.1f} {site:12.0f} {dev:7.1f}{marker}")


if __name__ == "__main__":
    main()
