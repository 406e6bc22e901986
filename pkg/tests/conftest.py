import pytest

from homebenefits.occupancy import build_profile
from homebenefits.scenarios import scenario_catalog
from homebenefits.thermal import BuildingParams, simulate_year
from homebenefits.weather import PRESETS, synthesize_weather


@pytest.fixture(scope="session")
def stuttgart_weather():
    return synthesize_weather(PRESETS["stuttgart-cfb"], seed=42)


@pytest.fixture(scope="session")
def algiers_weather():
    return synthesize_weather(PRESETS["algiers-csa"], seed=42)


@pytest.fixture(scope="session")
def default_profile():
    return build_profile(seed=42)


@pytest.fixture(scope="session")
def default_params():
    return BuildingParams()


@pytest.fixture(scope="session")
def city_runs(stuttgart_weather, algiers_weather, default_profile, default_params):
    """All six city/scenario annual results, keyed by (city, scenario)."""
    runs = {}
    for city, weather in (
        ("stuttgart", stuttgart_weather),
        ("algiers", algiers_weather),
    ):
        for spec in scenario_catalog():
            runs[(city, spec.name)] = simulate_year(
                weather, default_profile, spec.policy, default_params
            )
    return runs
