"""Smart-home energy simulation and homeowner benefit indicators."""

__version__ = "0.1.0"

from .indicators import (
    EconParams,
    EnergySavings,
    IndicatorReport,
    full_report,
    report_from_savings,
)
from .occupancy import OccupancyProfile, OccupancyState, build_profile
from .scenarios import ControlPolicy, ScenarioSpec, scenario_catalog
from .tariff import CarrierConsumption, PriceBook, annual_cost, annual_cost_saving
from .thermal import BuildingParams, SimulationResult, simulate_year
from .weather import ClimatePreset, WeatherSeries, load_weather_csv, synthesize_weather

__all__ = [
    "__version__",
    "BuildingParams",
    "CarrierConsumption",
    "ClimatePreset",
    "ControlPolicy",
    "EconParams",
    "EnergySavings",
    "IndicatorReport",
    "OccupancyProfile",
    "OccupancyState",
    "PriceBook",
    "ScenarioSpec",
    "SimulationResult",
    "WeatherSeries",
    "annual_cost",
    "annual_cost_saving",
    "build_profile",
    "full_report",
    "load_weather_csv",
    "report_from_savings",
    "scenario_catalog",
    "simulate_year",
    "synthesize_weather",
]
