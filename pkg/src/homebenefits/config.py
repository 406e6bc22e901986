"""Run configuration: defaults, config-file loading, and price-book parsing.

A run is described by a single structured config file (TOML or JSON) whose
keys mirror the dataclasses below; command-line flags override file values.
All randomness in a run flows from the single `seed` key.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Optional, Union

from .indicators import EconParams
from .occupancy import OccupancyProfile, build_profile
from .scenarios import SCENARIO_NAMES
from .tariff import (
    PRICE_BOOKS,
    BlockTariff,
    FlatTariff,
    PriceBook,
    TariffStructure,
    get_price_book,
)
from .thermal import BuildingParams
from .weather import PRESETS, WeatherSeries, get_preset, load_weather_csv, synthesize_weather


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class OccupancySettings:
    workday_away_start: int = 8
    workday_away_end: int = 18
    winter_vacation_start: int = 10  # 1-based day of year
    summer_vacation_start: int = 200
    weekend_presence: float = 0.6


@dataclass(frozen=True)
class RunConfig:
    seed: int = 42
    weather_preset: Optional[str] = "stuttgart-cfb"
    weather_csv: Optional[str] = None
    scenario: str = "baseline"
    price_book: Union[str, PriceBook] = "germany-2019"
    building: BuildingParams = field(default_factory=BuildingParams)
    occupancy: OccupancySettings = field(default_factory=OccupancySettings)
    econ: EconParams = field(default_factory=EconParams)

    def __post_init__(self) -> None:
        if (self.weather_preset is None) == (self.weather_csv is None):
            raise ConfigError(
                "exactly one weather source is required: weather_preset or weather_csv"
            )
        if self.weather_preset is not None and self.weather_preset not in PRESETS:
            valid = ", ".join(sorted(PRESETS))
            raise ConfigError(
                f"weather_preset: unknown preset '{self.weather_preset}' (valid: {valid})"
            )
        if self.scenario not in SCENARIO_NAMES:
            raise ConfigError(
                f"scenario: unknown scenario '{self.scenario}' "
                f"(valid: {', '.join(SCENARIO_NAMES)})"
            )

    def resolved_price_book(self) -> PriceBook:
        if isinstance(self.price_book, PriceBook):
            return self.price_book
        try:
            return get_price_book(self.price_book)
        except KeyError as exc:
            raise ConfigError(f"price_book: {exc.args[0]}") from exc


def load_config_data(path: str | Path) -> dict:
    """Read a TOML or JSON config file into a plain dict."""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    suffix = path.suffix.lower()
    text = path.read_text(encoding="utf-8")
    if suffix == ".toml":
        try:
            import tomllib  # Python >= 3.11
        except ModuleNotFoundError:
            import tomli as tomllib
        try:
            return tomllib.loads(text)
        except Exception as exc:
            raise ConfigError(f"{path}: invalid TOML: {exc}") from exc
    if suffix == ".json":
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: invalid JSON: {exc}") from exc
    raise ConfigError(f"{path}: unsupported config format '{suffix}' (use .toml or .json)")


def _build_section(cls, data: dict, section: str):
    """Instantiate a flat dataclass from a config section with field checks."""
    allowed = {f.name for f in fields(cls)}
    unknown = set(data) - allowed
    if unknown:
        raise ConfigError(
            f"{section}: unknown key(s) {sorted(unknown)} (valid: {sorted(allowed)})"
        )
    try:
        return cls(**data)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{section}: {exc}") from exc


def parse_tariff_structure(data: Any, section: str) -> TariffStructure:
    if not isinstance(data, dict) or "type" not in data:
        raise ConfigError(f"{section}: expected an object with a 'type' key")
    kind = data["type"]
    body = {k: v for k, v in data.items() if k != "type"}
    if kind == "flat":
        return _build_section(FlatTariff, body, section)
    if kind == "block":
        return _build_section(BlockTariff, body, section)
    raise ConfigError(f"{section}.type: must be 'flat' or 'block', got '{kind}'")


def parse_price_book(data: Any, section: str = "price_book") -> Union[str, PriceBook]:
    """Accept a preset name or a full custom book definition."""
    if isinstance(data, str):
        if data not in PRICE_BOOKS:
            valid = ", ".join(sorted(PRICE_BOOKS))
            raise ConfigError(f"{section}: unknown price book '{data}' (valid: {valid})")
        return data
    if not isinstance(data, dict):
        raise ConfigError(f"{section}: expected a preset name or an object")
    for carrier in ("electricity", "gas"):
        if carrier not in data:
            raise ConfigError(f"{section}: missing '{carrier}' tariff")
    return PriceBook(
        country=str(data.get("country", "custom")),
        electricity=parse_tariff_structure(data["electricity"], f"{section}.electricity"),
        gas=parse_tariff_structure(data["gas"], f"{section}.gas"),
    )


def run_config_from_dict(data: dict, **overrides: Any) -> RunConfig:
    """Assemble a RunConfig from file data plus keyword overrides.

    Overrides win over file values; None overrides are ignored.
    """
    known = {
        "seed",
        "weather_preset",
        "weather_csv",
        "scenario",
        "price_book",
        "building",
        "occupancy",
        "econ",
    }
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown top-level key(s) {sorted(unknown)}")

    merged: dict[str, Any] = dict(data)
    for key, value in overrides.items():
        if value is not None:
            merged[key] = value
    # A CSV override replaces a preset from the file and vice versa.
    if overrides.get("weather_csv") is not None and "weather_preset" not in overrides:
        merged["weather_preset"] = None
    if overrides.get("weather_preset") is not None and "weather_csv" not in overrides:
        merged["weather_csv"] = None
    if "weather_preset" not in merged and "weather_csv" not in merged:
        merged["weather_preset"] = "stuttgart-cfb"

    building = merged.get("building", {})
    if isinstance(building, dict):
        building = _build_section(BuildingParams, building, "building")
    occupancy = merged.get("occupancy", {})
    if isinstance(occupancy, dict):
        occupancy = _build_section(OccupancySettings, occupancy, "occupancy")
    econ = merged.get("econ", {})
    if isinstance(econ, dict):
        econ = _build_section(EconParams, econ, "econ")
    price_book = merged.get("price_book", "germany-2019")
    if not isinstance(price_book, PriceBook):
        price_book = parse_price_book(price_book)

    try:
        return RunConfig(
            seed=int(merged.get("seed", 42)),
            weather_preset=merged.get("weather_preset"),
            weather_csv=merged.get("weather_csv"),
            scenario=str(merged.get("scenario", "baseline")),
            price_book=price_book,
            building=building,
            occupancy=occupancy,
            econ=econ,
        )
    except ConfigError:
        raise
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc


def make_weather(config: RunConfig) -> WeatherSeries:
    if config.weather_csv is not None:
        return load_weather_csv(config.weather_csv)
    return synthesize_weather(get_preset(config.weather_preset), config.seed)


def make_profile(config: RunConfig) -> OccupancyProfile:
    occ = config.occupancy
    return build_profile(
        seed=config.seed,
        workday_away=(occ.workday_away_start, occ.workday_away_end),
        winter_vacation_start=occ.winter_vacation_start,
        summer_vacation_start=occ.summer_vacation_start,
        weekend_presence=occ.weekend_presence,
    )


def weather_source_name(config: RunConfig) -> str:
    return config.weather_preset if config.weather_preset else str(config.weather_csv)
