"""Hourly weather inputs for one simulated year.

Two sources are supported: a minimal two-signal CSV (outdoor temperature and
global horizontal irradiance) and a synthetic generator driven by named
climate presets. The synthetic model is a double sinusoid (seasonal plus
diurnal) with seeded Gaussian noise on temperature, and a clear-sky half-sine
irradiance profile scaled by a seeded per-day cloudiness factor in [0.3, 1.0].

The simulated year is always 8760 hours; leap days are ignored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

HOURS_PER_YEAR = 8760
DAYS_PER_YEAR = 365
CSV_HEADER = "hour,temp_c,ghi_wm2"

TEMP_MIN_C = -60.0
TEMP_MAX_C = 60.0

CLOUD_FACTOR_MIN = 0.3
CLOUD_FACTOR_MAX = 1.0


class WeatherError(ValueError):
    """Base class for invalid weather input."""


class MissingColumn(WeatherError):
    pass


class NonMonotonicHours(WeatherError):
    pass


class RecordCountNot8760(WeatherError):
    pass


class UnparsableNumber(WeatherError):
    pass


@dataclass(frozen=True)
class WeatherRecord:
    """One hour of weather."""

    hour_of_year: int
    outdoor_temp: float  # degrees C
    ghi: float  # W/m2, global horizontal irradiance


@dataclass(frozen=True)
class ClimatePreset:
    """Parameters of the synthetic weather model for one climate.

    `phase` is the 1-based day of year on which the seasonal temperature
    minimum falls. `noise_std` is the standard deviation of the hourly
    Gaussian temperature noise; set it to 0 for a noise-free series.
    """

    name: str
    mean_annual_temp: float  # degrees C
    seasonal_amplitude: float  # K
    diurnal_amplitude: float  # K
    peak_ghi: float  # W/m2, clear-sky summer noon
    phase: int  # day of year of the coldest day
    noise_std: float = 1.5  # K

    def __post_init__(self) -> None:
        if self.seasonal_amplitude < 0 or self.diurnal_amplitude < 0:
            raise ValueError("amplitudes must be >= 0")
        if self.peak_ghi <= 0:
            raise ValueError("peak_ghi must be > 0")
        if not 1 <= self.phase <= DAYS_PER_YEAR:
            raise ValueError("phase must be a day of year in 1..365")
        if self.noise_std < 0:
            raise ValueError("noise_std must be >= 0")


# Preset values are calibrated so that the default building model lands in
# the documented annual-consumption bands for both cities; they are synthetic
# stand-ins, not measured climate normals.
PRESETS: dict[str, ClimatePreset] = {
    "stuttgart-cfb": ClimatePreset(
        name="stuttgart-cfb",
        mean_annual_temp=9.5,
        seasonal_amplitude=9.5,
        diurnal_amplitude=4.0,
        peak_ghi=820.0,
        phase=20,
    ),
    "algiers-csa": ClimatePreset(
        name="algiers-csa",
        mean_annual_temp=18.2,
        seasonal_amplitude=7.0,
        diurnal_amplitude=5.0,
        peak_ghi=950.0,
        phase=25,
    ),
}


class WeatherSeries:
    """Immutable hourly weather for one 8760-hour year.

    Hours are implicit: index i is hour-of-year i. Arrays are read-only
    so a series can be shared across concurrent scenario runs.
    """

    __slots__ = ("temp_c", "ghi_wm2")

    def __init__(self, temp_c: np.ndarray, ghi_wm2: np.ndarray) -> None:
        temp_c = np.ascontiguousarray(temp_c, dtype=np.float64)
        ghi_wm2 = np.ascontiguousarray(ghi_wm2, dtype=np.float64)
        if temp_c.shape != (HOURS_PER_YEAR,) or ghi_wm2.shape != (HOURS_PER_YEAR,):
            raise RecordCountNot8760(
                f"a weather series must hold exactly {HOURS_PER_YEAR} hourly records"
            )
        if np.any(ghi_wm2 < 0):
            bad = int(np.argmax(ghi_wm2 < 0))
            raise UnparsableNumber(f"ghi must be >= 0 (hour {bad})")
        if np.any(temp_c < TEMP_MIN_C) or np.any(temp_c > TEMP_MAX_C):
            bad = int(np.argmax((temp_c < TEMP_MIN_C) | (temp_c > TEMP_MAX_C)))
            raise UnparsableNumber(
                f"outdoor_temp must be within [{TEMP_MIN_C}, {TEMP_MAX_C}] (hour {bad})"
            )
        temp_c.setflags(write=False)
        ghi_wm2.setflags(write=False)
        object.__setattr__(self, "temp_c", temp_c)
        object.__setattr__(self, "ghi_wm2", ghi_wm2)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("WeatherSeries is immutable")

    def __len__(self) -> int:
        return HOURS_PER_YEAR

    def __getitem__(self, hour: int) -> WeatherRecord:
        return WeatherRecord(
            hour_of_year=int(hour),
            outdoor_temp=float(self.temp_c[hour]),
            ghi=float(self.ghi_wm2[hour]),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeatherSeries):
            return NotImplemented
        return np.array_equal(self.temp_c, other.temp_c) and np.array_equal(
            self.ghi_wm2, other.ghi_wm2
        )

    def mean_temp(self) -> float:
        return float(self.temp_c.mean())

    def monthly_mean_temp(self) -> np.ndarray:
        """Mean outdoor temperature per calendar month, shape (12,)."""
        month_days = [31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31]
        means = np.empty(12)
        start = 0
        for m, days in enumerate(month_days):
            end = start + days * 24
            means[m] = self.temp_c[start:end].mean()
            start = end
        return means


def synthesize_weather(preset: ClimatePreset, seed: int) -> WeatherSeries:
    """Generate a deterministic synthetic year for a climate preset.

    The annual mean temperature of the result equals the preset mean exactly
    (the series is recentred after noise is added). The temperature minimum
    falls near the preset's phase day.
    """
    rng = np.random.default_rng(seed)
    hours = np.arange(HOURS_PER_YEAR, dtype=np.float64)
    day = hours / 24.0  # fractional, 0-based day of year
    hod = (hours % 24.0) + 0.5  # mid-hour solar time

    phase0 = preset.phase - 1
    seasonal = -preset.seasonal_amplitude * np.cos(
        2.0 * math.pi * (day - phase0) / DAYS_PER_YEAR
    )
    diurnal = preset.diurnal_amplitude * np.cos(2.0 * math.pi * (hod - 15.0) / 24.0)
    noise = rng.normal(0.0, 1.0, HOURS_PER_YEAR) * preset.noise_std

    temp = preset.mean_annual_temp + seasonal + diurnal + noise
    temp += preset.mean_annual_temp - temp.mean()

    # 0 on the coldest day, 1 at mid-summer; drives day length and noon peak.
    season_strength = 0.5 * (
        1.0 - np.cos(2.0 * math.pi * (day - phase0) / DAYS_PER_YEAR)
    )
    day_length = 8.0 + 8.0 * season_strength
    sunrise = 12.0 - day_length / 2.0
    sun = np.sin(math.pi * (hod - sunrise) / day_length)
    sun = np.clip(sun, 0.0, None)
    sun[(hod < sunrise) | (hod > sunrise + day_length)] = 0.0

    cloud_daily = rng.uniform(CLOUD_FACTOR_MIN, CLOUD_FACTOR_MAX, DAYS_PER_YEAR)
    cloud = np.repeat(cloud_daily, 24)
    noon_peak = preset.peak_ghi * (0.35 + 0.65 * season_strength)
    ghi = cloud * noon_peak * sun

    temp = np.clip(temp, TEMP_MIN_C, TEMP_MAX_C)
    return WeatherSeries(temp_c=temp, ghi_wm2=ghi)


def load_weather_csv(path: str | Path) -> WeatherSeries:
    """Load a weather series from a `hour,temp_c,ghi_wm2` CSV file.

    The file must contain the exact header and 8760 data rows with hours
    0..8759 in order. Errors identify the offending line (1-based, header
    is line 1).
    """
    path = Path(path)
    with path.open("r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise MissingColumn(f"{path}: empty file, expected header '{CSV_HEADER}'")
    header = lines[0].strip()
    if header != CSV_HEADER:
        raise MissingColumn(
            f"{path}: line 1: header must be '{CSV_HEADER}', got '{header}'"
        )

    data_lines = [ln for ln in lines[1:] if ln.strip() != ""]
    if len(data_lines) != HOURS_PER_YEAR:
        raise RecordCountNot8760(
            f"{path}: expected {HOURS_PER_YEAR} data rows, found {len(data_lines)}"
        )

    temp = np.empty(HOURS_PER_YEAR)
    ghi = np.empty(HOURS_PER_YEAR)
    for i, line in enumerate(data_lines):
        lineno = i + 2
        fields = line.split(",")
        if len(fields) != 3:
            raise UnparsableNumber(
                f"{path}: line {lineno}: expected 3 comma-separated fields"
            )
        try:
            hour = int(fields[0])
            t = float(fields[1])
            g = float(fields[2])
        except ValueError as exc:
            raise UnparsableNumber(f"{path}: line {lineno}: {exc}") from exc
        if hour != i:
            raise NonMonotonicHours(
                f"{path}: line {lineno}: expected hour {i}, got {hour}"
            )
        if g < 0:
            raise UnparsableNumber(f"{path}: line {lineno}: ghi must be >= 0")
        if not TEMP_MIN_C <= t <= TEMP_MAX_C:
            raise UnparsableNumber(
                f"{path}: line {lineno}: temp_c outside [{TEMP_MIN_C}, {TEMP_MAX_C}]"
            )
        temp[i] = t
        ghi[i] = g
    return WeatherSeries(temp_c=temp, ghi_wm2=ghi)


def write_weather_csv(series: WeatherSeries, path: str | Path) -> None:
    """Write a series in the loader's format; values round-trip exactly."""
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        fh.write(CSV_HEADER + "\n")
        for h in range(HOURS_PER_YEAR):
            fh.write(f"{h},{float(series.temp_c[h])!r},{float(series.ghi_wm2[h])!r}\n")


def get_preset(name: str) -> ClimatePreset:
    try:
        return PRESETS[name]
    except KeyError:
        valid = ", ".join(sorted(PRESETS))
        raise KeyError(f"unknown weather preset '{name}' (valid: {valid})") from None
