"""Household occupancy pattern for one simulated year.

The family of four is away during work hours on weekdays, present with
seeded randomness during weekend daytimes, and gone for two 15-day
vacations (one in winter, one in summer). The simulated year starts on a
Monday, January 1, which removes all calendar ambiguity.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from pathlib import Path

import numpy as np

from .weather import DAYS_PER_YEAR, HOURS_PER_YEAR

VACATION_DAYS = 15
WEEKEND_DAY_START = 8  # weekend daytime window for random presence draws
WEEKEND_DAY_END = 22
WEEKEND_BLOCK_HOURS = 2  # presence drawn per block to avoid hourly flicker


class OccupancyState(IntEnum):
    OCCUPIED = 0
    AWAY = 1
    VACATION = 2


class OverlappingVacations(ValueError):
    pass


@dataclass(frozen=True)
class OccupancyProfile:
    """Immutable per-hour occupancy states for an 8760-hour year."""

    states: np.ndarray  # uint8, values of OccupancyState
    seed: int

    def __post_init__(self) -> None:
        if self.states.shape != (HOURS_PER_YEAR,):
            raise ValueError(f"profile must cover {HOURS_PER_YEAR} hours")
        self.states.setflags(write=False)

    def __len__(self) -> int:
        return HOURS_PER_YEAR

    def __getitem__(self, hour: int) -> OccupancyState:
        return OccupancyState(int(self.states[hour]))

    def count(self, state: OccupancyState) -> int:
        return int(np.count_nonzero(self.states == int(state)))

    def to_csv(self, path: str | Path) -> None:
        path = Path(path)
        with path.open("w", encoding="utf-8") as fh:
            fh.write("hour,state\n")
            for h in range(HOURS_PER_YEAR):
                fh.write(f"{h},{OccupancyState(int(self.states[h])).name}\n")


def is_weekend(day_of_year_0: int) -> bool:
    """Saturday/Sunday test for a 0-based day index; day 0 is a Monday."""
    return day_of_year_0 % 7 >= 5


def build_profile(
    seed: int,
    workday_away: tuple[int, int] = (8, 18),
    winter_vacation_start: int = 10,
    summer_vacation_start: int = 200,
    weekend_presence: float = 0.6,
) -> OccupancyProfile:
    """Build the deterministic occupancy profile for one year.

    `workday_away` is a half-open [start, end) hour range; an empty range
    (start >= end) disables workday absences. Vacation starts are 1-based
    days of year; each vacation covers 15 whole days. `weekend_presence`
    is the probability that a weekend daytime 2-hour block is spent at
    home.
    """
    if not 0 <= workday_away[0] <= 24 or not 0 <= workday_away[1] <= 24:
        raise ValueError("workday_away hours must lie within 00:00-24:00")
    if not 0.0 <= weekend_presence <= 1.0:
        raise ValueError("weekend_presence must be a probability")
    for start in (winter_vacation_start, summer_vacation_start):
        if not 1 <= start <= DAYS_PER_YEAR - VACATION_DAYS + 1:
            raise ValueError("vacation must fall entirely within the year")

    w0 = winter_vacation_start - 1
    s0 = summer_vacation_start - 1
    if w0 < s0 + VACATION_DAYS and s0 < w0 + VACATION_DAYS:
        raise OverlappingVacations(
            f"vacations starting on days {winter_vacation_start} and "
            f"{summer_vacation_start} overlap"
        )

    rng = np.random.default_rng(seed)
    states = np.full(HOURS_PER_YEAR, int(OccupancyState.OCCUPIED), dtype=np.uint8)

    away_start, away_end = workday_away
    for day in range(DAYS_PER_YEAR):
        base = day * 24
        if is_weekend(day):
            for block_start in range(
                WEEKEND_DAY_START, WEEKEND_DAY_END, WEEKEND_BLOCK_HOURS
            ):
                at_home = rng.random() < weekend_presence
                if not at_home:
                    end = min(block_start + WEEKEND_BLOCK_HOURS, WEEKEND_DAY_END)
                    states[base + block_start : base + end] = int(OccupancyState.AWAY)
        elif away_start < away_end:
            states[base + away_start : base + away_end] = int(OccupancyState.AWAY)

    for v0 in (w0, s0):
        states[v0 * 24 : (v0 + VACATION_DAYS) * 24] = int(OccupancyState.VACATION)

    return OccupancyProfile(states=states, seed=seed)
