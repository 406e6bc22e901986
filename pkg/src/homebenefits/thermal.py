"""Single-zone hourly building simulation.

Thermal model
-------------
One lumped air/mass node with overall loss coefficient UA (W/K) and
capacitance C (J/K):

    C dT/dt = UA (T_out - T) + Q_solar + Q_internal + Q_hvac

Inputs are held constant within each hour, so the step uses the exact
exponential solution and is unconditionally stable. HVAC is idealized: when
the free-float temperature would violate a setpoint, the equipment delivers
the constant power (clipped at capacity) that lands the zone exactly on that
setpoint at the end of the hour; inside the deadband it is off.

Cooling is a comfort response: it engages only in hours where the zone would
drift above the 25 C comfort trigger. The fixed baseline thermostat serves
the zone regardless of presence; the smart policies only cool an occupied
home. Heating is never presence-gated (freeze protection).

Lighting
--------
Installed power is lighting_power_density * floor_area. Manual control
lights dark occupied hours at full power and also dark evening hours when
nobody is home (lights forgotten on the way out), except during vacations.
The scheduled smart lamp replays the learned household pattern and therefore
matches the manual totals exactly; only sensor control (motion gating plus
linear daylight dimming) reduces them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional

import numpy as np

from .occupancy import OccupancyProfile, OccupancyState
from .scenarios import BASELINE, ControlPolicy, LightingMode, effective_setpoints
from .weather import HOURS_PER_YEAR, WeatherRecord, WeatherSeries

COMFORT_COOLING_TRIGGER_C = 25.0
EVENING_START = 18  # forgotten-lights window, [start, end) hours
EVENING_END = 23

SECONDS_PER_HOUR = 3600.0


class HvacMode(Enum):
    HEAT = "heat"
    COOL = "cool"
    OFF = "off"


class InvalidSetpoints(ValueError):
    pass


class LengthMismatch(ValueError):
    pass


@dataclass(frozen=True)
class BuildingParams:
    """Envelope, systems and internal-gain parameters.

    Defaults were calibrated once against the documented average annual
    consumption of a German single-family home (30.2 MWh excluding cooling)
    and then frozen; see scripts/calibrate_envelope.py.
    """

    floor_area: float = 150.0  # m2
    ua: float = 300.0  # W/K
    capacitance: float = 40e6  # J/K
    window_solar_area: float = 6.0  # m2 effective solar aperture
    internal_gain_per_person: float = 90.0  # W
    occupants: int = 4
    heater_efficiency: float = 0.9  # gas heating
    cooling_cop: float = 3.0  # electric cooling
    lighting_power_density: float = 10.0  # W/m2
    hvac_capacity: float = 12000.0  # W, symmetric heat/cool
    daylight_threshold: float = 120.0  # W/m2 GHI for full daylight harvest

    def __post_init__(self) -> None:
        positive = (
            self.floor_area,
            self.ua,
            self.capacitance,
            self.window_solar_area,
            self.internal_gain_per_person,
            self.occupants,
            self.heater_efficiency,
            self.cooling_cop,
            self.lighting_power_density,
            self.hvac_capacity,
            self.daylight_threshold,
        )
        if any(v <= 0 for v in positive):
            raise ValueError("all building parameters must be strictly positive")
        if self.heater_efficiency > 1.0:
            raise ValueError("heater_efficiency must be <= 1")
        if self.cooling_cop < 1.0:
            raise ValueError("cooling_cop must be >= 1")

    @property
    def installed_lighting_w(self) -> float:
        return self.lighting_power_density * self.floor_area


@dataclass(frozen=True)
class ZoneState:
    indoor_temp: float  # degrees C
    hvac_mode: HvacMode = HvacMode.OFF
    delivered_heat_wh: float = 0.0  # signed; negative while cooling


@dataclass
class SimulationResult:
    """Annual end-use energy by carrier, with an optional hourly trace."""

    heating_kwh: float  # gas, site energy
    cooling_kwh: float  # electricity
    lighting_kwh: float  # electricity
    trace: Optional[dict[str, np.ndarray]] = None  # temp_c, heat_wh, cool_wh, light_wh

    @property
    def electricity_kwh(self) -> float:
        return self.cooling_kwh + self.lighting_kwh

    @property
    def gas_kwh(self) -> float:
        return self.heating_kwh

    @property
    def total_kwh(self) -> float:
        return self.heating_kwh + self.cooling_kwh + self.lighting_kwh

    def write_trace_csv(self, path: str | Path) -> None:
        if self.trace is None:
            raise ValueError("simulation was run without a trace")
        path = Path(path)
        t = self.trace
        with path.open("w", encoding="utf-8") as fh:
            fh.write("hour,temp_in_c,heat_wh,cool_wh,light_wh\n")
            for h in range(HOURS_PER_YEAR):
                fh.write(
                    f"{h},{t['temp_c'][h]:.4f},{t['heat_wh'][h]:.4f},"
                    f"{t['cool_wh'][h]:.4f},{t['light_wh'][h]:.4f}\n"
                )


def comfort_cooling_demand(indoor_temp: float, occupied: bool) -> bool:
    """Comfort-driven cooling call: occupied and strictly above 25 C."""
    return occupied and indoor_temp > COMFORT_COOLING_TRIGGER_C


def hourly_gains_w(record: WeatherRecord, state: OccupancyState, params: BuildingParams) -> float:
    """Solar plus metabolic internal gains for one hour, in W."""
    gains = record.ghi * params.window_solar_area
    if state is OccupancyState.OCCUPIED:
        gains += params.occupants * params.internal_gain_per_person
    return gains


def _advance(t0: float, t_out: float, q_w: float, params: BuildingParams) -> float:
    """End-of-hour temperature under constant net input power q_w."""
    if params.ua <= 0.0:
        return t0 + q_w * SECONDS_PER_HOUR / params.capacitance
    a = params.ua * SECONDS_PER_HOUR / params.capacitance
    t_eq = t_out + q_w / params.ua
    return t_eq + (t0 - t_eq) * math.exp(-a)


def _hold_power_w(
    t0: float, t_out: float, gains_w: float, target: float, params: BuildingParams
) -> float:
    """Constant HVAC power that lands the zone on `target` after one hour."""
    if params.ua <= 0.0:
        return (target - t0) * params.capacitance / SECONDS_PER_HOUR - gains_w
    a = params.ua * SECONDS_PER_HOUR / params.capacitance
    k = math.exp(-a)
    t_eq_needed = (target - t0 * k) / (1.0 - k)
    return params.ua * (t_eq_needed - t_out) - gains_w


def step_zone(
    state: ZoneState,
    weather: WeatherRecord,
    setpoints: tuple[float, float],
    params: BuildingParams,
    gains_w: float,
) -> ZoneState:
    """Advance the zone one hour under a two-setpoint thermostat.

    Heats when the free-float temperature would fall below the heat
    setpoint, cools when it would rise above the cool setpoint, and is off
    inside the deadband. Delivered power is clipped at hvac_capacity, in
    which case the zone misses the setpoint.
    """
    heat_sp, cool_sp = setpoints
    if heat_sp >= cool_sp:
        raise InvalidSetpoints(
            f"heat setpoint ({heat_sp}) must be below cool setpoint ({cool_sp})"
        )
    t0 = state.indoor_temp
    t_free = _advance(t0, weather.outdoor_temp, gains_w, params)

    if t_free < heat_sp:
        q = _hold_power_w(t0, weather.outdoor_temp, gains_w, heat_sp, params)
        q = min(q, params.hvac_capacity)
        mode = HvacMode.HEAT
    elif t_free > cool_sp:
        q = _hold_power_w(t0, weather.outdoor_temp, gains_w, cool_sp, params)
        q = max(q, -params.hvac_capacity)
        mode = HvacMode.COOL
    else:
        return ZoneState(indoor_temp=t_free, hvac_mode=HvacMode.OFF, delivered_heat_wh=0.0)

    t1 = _advance(t0, weather.outdoor_temp, gains_w + q, params)
    return ZoneState(indoor_temp=t1, hvac_mode=mode, delivered_heat_wh=q * 1.0)


def step_energy_residual(
    t0: float,
    t1: float,
    t_out: float,
    q_total_w: float,
    params: BuildingParams,
) -> float:
    """Relative residual of the hourly energy balance.

    Compares C * dT against the time integral of the net heat flow over the
    hour, both in J, using the closed-form integral of the exponential
    temperature trajectory.
    """
    c = params.capacitance
    lhs = c * (t1 - t0)
    if params.ua <= 0.0:
        rhs = q_total_w * SECONDS_PER_HOUR
    else:
        a = params.ua * SECONDS_PER_HOUR / c
        t_eq = t_out + q_total_w / params.ua
        rhs = c * (t_eq - t0) * (1.0 - math.exp(-a))
    scale = max(abs(lhs), abs(rhs), c * 1e-6)
    return abs(lhs - rhs) / scale


def lighting_demand(
    record: WeatherRecord,
    state: OccupancyState,
    mode: LightingMode,
    params: BuildingParams,
) -> float:
    """Electric lighting power for one hour, in W."""
    installed = params.installed_lighting_w
    threshold = params.daylight_threshold

    if mode is LightingMode.SENSOR_DAYLIGHT:
        if state is not OccupancyState.OCCUPIED:
            return 0.0
        dim = 1.0 - record.ghi / threshold
        return installed * max(0.0, min(1.0, dim))

    # Manual habit, which the learned lamp schedule reproduces one-to-one:
    # full power in dark occupied hours plus dark evenings when nobody is
    # home, never during vacations.
    if state is OccupancyState.VACATION:
        return 0.0
    if record.ghi >= threshold:
        return 0.0
    hod = record.hour_of_year % 24
    if state is OccupancyState.OCCUPIED or EVENING_START <= hod < EVENING_END:
        return installed
    return 0.0


def simulate_year(
    weather: WeatherSeries,
    profile: OccupancyProfile,
    policy: ControlPolicy,
    params: BuildingParams,
    keep_trace: bool = False,
    initial_temp: Optional[float] = None,
) -> SimulationResult:
    """Simulate 8760 hours and aggregate end-use energy by carrier.

    Gas heating is thermal output divided by heater efficiency; cooling
    electricity is extracted heat divided by the COP.
    """
    if len(weather) != len(profile):
        raise LengthMismatch("weather and occupancy must cover the same hours")

    t = policy.heat_setpoint if initial_temp is None else initial_temp
    baseline_kind = policy.kind == BASELINE
    heat_wh_total = 0.0
    cool_wh_total = 0.0
    light_wh_total = 0.0
    trace: Optional[dict[str, np.ndarray]] = None
    if keep_trace:
        trace = {
            "temp_c": np.empty(HOURS_PER_YEAR),
            "heat_wh": np.zeros(HOURS_PER_YEAR),
            "cool_wh": np.zeros(HOURS_PER_YEAR),
            "light_wh": np.zeros(HOURS_PER_YEAR),
        }

    away_streak = 0
    for h in range(HOURS_PER_YEAR):
        record = weather[h]
        state = profile[h]
        occupied = state is OccupancyState.OCCUPIED
        away_streak = 0 if occupied else away_streak + 1

        heat_sp, cool_sp = effective_setpoints(policy, state, away_streak)
        gains = hourly_gains_w(record, state, params)
        zone = ZoneState(indoor_temp=t)
        t_free = _advance(t, record.outdoor_temp, gains, params)

        if t_free < heat_sp:
            zone = step_zone(zone, record, (heat_sp, math.inf), params, gains)
        elif (
            comfort_cooling_demand(t_free, True if baseline_kind else occupied)
            and t_free > cool_sp
        ):
            zone = step_zone(zone, record, (-math.inf, cool_sp), params, gains)
        else:
            zone = ZoneState(indoor_temp=t_free)

        light_w = lighting_demand(record, state, policy.lighting_mode, params)

        heat_wh = max(zone.delivered_heat_wh, 0.0)
        cool_wh = max(-zone.delivered_heat_wh, 0.0)
        heat_wh_total += heat_wh
        cool_wh_total += cool_wh
        light_wh_total += light_w  # 1 h duty
        if trace is not None:
            trace["temp_c"][h] = zone.indoor_temp
            trace["heat_wh"][h] = heat_wh
            trace["cool_wh"][h] = cool_wh
            trace["light_wh"][h] = light_w
        t = zone.indoor_temp

    return SimulationResult(
        heating_kwh=heat_wh_total / 1000.0 / params.heater_efficiency,
        cooling_kwh=cool_wh_total / 1000.0 / params.cooling_cop,
        lighting_kwh=light_wh_total / 1000.0,
        trace=trace,
    )
