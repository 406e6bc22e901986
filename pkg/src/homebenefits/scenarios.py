"""The three automation levels and their control policies.

Baseline is manual control with a fixed thermostat. The low-cost kit (smart
thermostat plus smart lamp) drives setbacks from a learned schedule that, at
steady state, matches the household's true at-home/away pattern. The
extended kit adds a hub, motion and light sensors: auto-away setbacks,
accepted setpoint suggestions (1 K in the saving direction while occupied),
motion-gated lighting and daylight dimming.

Because the learned schedule is modelled as matching the true occupancy
pattern, schedule-driven setbacks and sensor-driven setbacks engage on the
same hours; the extended policy is never more demanding than the low-cost
policy in any hour.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .occupancy import OccupancyState

BASELINE = "baseline"
LOW_COST = "low-cost"
EXTENDED = "extended"
SCENARIO_NAMES = (BASELINE, LOW_COST, EXTENDED)


class LightingMode(Enum):
    MANUAL = "manual"
    SCHEDULED = "scheduled"
    SENSOR_DAYLIGHT = "sensor-daylight"


@dataclass(frozen=True)
class ControlPolicy:
    kind: str
    heat_setpoint: float = 20.0  # degrees C, occupied comfort pair
    cool_setpoint: float = 24.0
    setback_heat: float = 16.0  # relaxed pair during absences
    setback_cool: float = 28.0
    auto_away_delay: int = 2  # h of absence before auto-away engages
    suggestion_offset: float = 1.0  # K, accepted thermostat suggestions
    lighting_mode: LightingMode = LightingMode.MANUAL

    def __post_init__(self) -> None:
        if self.kind not in SCENARIO_NAMES:
            raise ValueError(f"unknown scenario kind '{self.kind}'")
        if self.heat_setpoint >= self.cool_setpoint:
            raise ValueError("heat setpoint must be below cool setpoint")
        if self.setback_heat > self.heat_setpoint:
            raise ValueError("setback_heat must not exceed heat_setpoint")
        if self.setback_cool < self.cool_setpoint:
            raise ValueError("setback_cool must not undercut cool_setpoint")
        if self.auto_away_delay < 0:
            raise ValueError("auto_away_delay must be >= 0")
        if self.suggestion_offset < 0:
            raise ValueError("suggestion_offset must be >= 0")


@dataclass(frozen=True)
class ScenarioSpec:
    """A control policy together with its device kit and upfront cost."""

    policy: ControlPolicy
    investment_eur: float
    devices: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.investment_eur < 0:
            raise ValueError("investment must be >= 0")
        if self.policy.kind == BASELINE and self.investment_eur != 0.0:
            raise ValueError("baseline has no investment")

    @property
    def name(self) -> str:
        return self.policy.kind


def effective_setpoints(
    policy: ControlPolicy, state: OccupancyState, away_streak: int = 0
) -> tuple[float, float]:
    """Heating/cooling setpoints the thermostat applies in a given hour.

    `away_streak` is the number of consecutive non-occupied hours up to and
    including the current one (0 while occupied).
    """
    if away_streak < 0:
        raise ValueError("away_streak must be >= 0")
    if policy.kind == BASELINE:
        return policy.heat_setpoint, policy.cool_setpoint
    if policy.kind == LOW_COST:
        if state is not OccupancyState.OCCUPIED:
            return policy.setback_heat, policy.setback_cool
        return policy.heat_setpoint, policy.cool_setpoint
    # extended: learned-schedule setbacks plus auto-away, suggestions applied
    # to the comfort pair while occupied
    if state is not OccupancyState.OCCUPIED or away_streak >= policy.auto_away_delay:
        return policy.setback_heat, policy.setback_cool
    return (
        policy.heat_setpoint - policy.suggestion_offset,
        policy.cool_setpoint + policy.suggestion_offset,
    )


def scenario_catalog() -> tuple[ScenarioSpec, ScenarioSpec, ScenarioSpec]:
    """The three scenarios with their device kits and investment costs."""
    return (
        ScenarioSpec(
            policy=ControlPolicy(kind=BASELINE, lighting_mode=LightingMode.MANUAL),
            investment_eur=0.0,
            devices=(),
        ),
        ScenarioSpec(
            policy=ControlPolicy(kind=LOW_COST, lighting_mode=LightingMode.SCHEDULED),
            investment_eur=268.93,
            devices=("smart thermostat", "smart lamp"),
        ),
        ScenarioSpec(
            policy=ControlPolicy(
                kind=EXTENDED, lighting_mode=LightingMode.SENSOR_DAYLIGHT
            ),
            investment_eur=528.35,
            devices=(
                "smart thermostat",
                "smart lamp",
                "wireless hub",
                "motion sensors",
                "light sensors",
            ),
        ),
    )


def get_scenario(name: str) -> ScenarioSpec:
    for spec in scenario_catalog():
        if spec.name == name:
            return spec
    valid = ", ".join(SCENARIO_NAMES)
    raise KeyError(f"unknown scenario '{name}' (valid: {valid})")
