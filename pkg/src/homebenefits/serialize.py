"""Shared serialization for CLI output files and HTTP responses.

The CLI and the HTTP facade must emit numerically identical fields for the
same inputs, so both go through these builders. Formatting is pinned:
2 decimals for EUR, 0 for kWh, 3 for rates and years; field order is fixed.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import __version__
from .thermal import SimulationResult

ENGINE_VERSION = __version__


def simulation_dict(
    result: SimulationResult, weather_name: str, scenario: str, seed: int
) -> dict:
    return {
        "engine_version": ENGINE_VERSION,
        "weather": weather_name,
        "scenario": scenario,
        "seed": seed,
        "heating_kwh": round(result.heating_kwh),
        "cooling_kwh": round(result.cooling_kwh),
        "lighting_kwh": round(result.lighting_kwh),
        "electricity_kwh": round(result.electricity_kwh),
        "gas_kwh": round(result.gas_kwh),
        "total_kwh": round(result.total_kwh),
    }


def simulation_from_dict(data: dict, source: str) -> SimulationResult:
    """Rebuild a result from a simulate output file (round-trip contract)."""
    missing = [k for k in ("heating_kwh", "cooling_kwh", "lighting_kwh") if k not in data]
    if missing:
        raise ValueError(f"{source}: missing field(s) {missing}")
    return SimulationResult(
        heating_kwh=float(data["heating_kwh"]),
        cooling_kwh=float(data["cooling_kwh"]),
        lighting_kwh=float(data["lighting_kwh"]),
    )


def dump_json(payload: dict, path: str | Path | None) -> str:
    """Render deterministic JSON; write it when a path is given."""
    text = json.dumps(payload, indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def dump_csv(rows: list[list[str]], path: str | Path | None) -> str:
    text = "\n".join(",".join(row) for row in rows) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def simulation_csv_rows(payload: dict) -> list[list[str]]:
    rows = [["field", "value"]]
    for key, value in payload.items():
        rows.append([key, str(value)])
    return rows
