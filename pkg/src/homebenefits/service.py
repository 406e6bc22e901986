"""Small HTTP facade over the simulation and indicator core.

JSON only, versioned under /api/v1, stateless: every response is a pure
function of the request body plus the static presets, and carries the
engine version and an echo of the effective configuration. The what-if UI
must never re-implement the finance math; it always round-trips through
this API.

Semantic validation failures (for example a negative tariff rate) map to
422, malformed or unknown fields to 400.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Any, Optional

from .benchmarks import CITY_BOOKS, CITY_PRESETS, INJECTION_BASELINE, REFERENCE_CASES
from .config import ConfigError, parse_price_book, run_config_from_dict
from .indicators import (
    EMISSION_FACTORS,
    EconParams,
    EnergySavings,
    annual_energy_savings,
    consumption_of,
    report_from_savings,
)
from .occupancy import build_profile
from .scenarios import SCENARIO_NAMES, get_scenario, scenario_catalog
from .serialize import ENGINE_VERSION, simulation_dict, simulation_from_dict
from .tariff import PRICE_BOOKS, BlockTariff, CarrierConsumption, FlatTariff, PriceBook
from .thermal import BuildingParams, simulate_year
from .weather import PRESETS, get_preset, synthesize_weather

DEFAULT_PORT = 8080


class ApiError(Exception):
    def __init__(self, status: int, message: str, fields: Optional[list[str]] = None):
        super().__init__(message)
        self.status = status
        self.message = message
        self.fields = fields or []


def _require_object(body: Any) -> dict:
    if not isinstance(body, dict):
        raise ApiError(400, "request body must be a JSON object")
    return body


def _check_unknown(body: dict, allowed: set[str], where: str) -> None:
    unknown = sorted(set(body) - allowed)
    if unknown:
        raise ApiError(400, f"unknown field(s) in {where}: {unknown}", unknown)


def _parse_savings(data: Any) -> EnergySavings:
    data = _require_object(data)
    _check_unknown(data, {"heating_kwh", "cooling_kwh", "lighting_kwh"}, "savings")
    try:
        return EnergySavings(
            heating_kwh=float(data.get("heating_kwh", 0.0)),
            cooling_kwh=float(data.get("cooling_kwh", 0.0)),
            lighting_kwh=float(data.get("lighting_kwh", 0.0)),
        )
    except (TypeError, ValueError) as exc:
        raise ApiError(400, f"savings: {exc}") from exc


def _parse_book(data: Any) -> PriceBook:
    if data is None:
        data = "germany-2019"
    try:
        book = parse_price_book(data)
    except ConfigError as exc:
        # Unknown preset or malformed structure is a schema problem; a rate
        # or threshold that violates an invariant is a semantic one.
        message = str(exc)
        if "must" in message:
            raise ApiError(422, message) from exc
        raise ApiError(400, message) from exc
    if isinstance(book, str):
        return PRICE_BOOKS[book]
    return book


def _parse_econ(data: Any, investment: float) -> EconParams:
    if data is None:
        data = {}
    data = _require_object(data)
    _check_unknown(data, {"discount_rate", "horizon_years", "investment_eur"}, "econ")
    base = EconParams()
    try:
        return EconParams(
            discount_rate=float(data.get("discount_rate", base.discount_rate)),
            horizon_years=int(data.get("horizon_years", base.horizon_years)),
            investment_eur=float(data.get("investment_eur", investment)),
        )
    except (TypeError, ValueError) as exc:
        raise ApiError(422, f"econ: {exc}") from exc


def handle_simulate(body: Any) -> dict:
    body = _require_object(body)
    _check_unknown(
        body, {"preset", "scenario", "seed", "building", "occupancy"}, "request"
    )
    preset_name = body.get("preset", "stuttgart-cfb")
    scenario_name = body.get("scenario", "baseline")
    if scenario_name not in SCENARIO_NAMES:
        raise ApiError(
            400,
            f"unknown scenario '{scenario_name}' (valid: {', '.join(SCENARIO_NAMES)})",
            ["scenario"],
        )
    if preset_name not in PRESETS:
        raise ApiError(
            400,
            f"unknown preset '{preset_name}' (valid: {', '.join(sorted(PRESETS))})",
            ["preset"],
        )
    try:
        config = run_config_from_dict(
            {
                "weather_preset": preset_name,
                "scenario": scenario_name,
                "seed": body.get("seed", 42),
                "building": body.get("building", {}),
                "occupancy": body.get("occupancy", {}),
            }
        )
    except ConfigError as exc:
        message = str(exc)
        if "unknown key" in message:
            raise ApiError(400, message) from exc
        raise ApiError(422, message) from exc

    weather = synthesize_weather(get_preset(preset_name), config.seed)
    profile = build_profile(
        seed=config.seed,
        workday_away=(config.occupancy.workday_away_start, config.occupancy.workday_away_end),
        winter_vacation_start=config.occupancy.winter_vacation_start,
        summer_vacation_start=config.occupancy.summer_vacation_start,
        weekend_presence=config.occupancy.weekend_presence,
    )
    spec = get_scenario(scenario_name)
    result = simulate_year(weather, profile, spec.policy, config.building)
    payload = simulation_dict(result, preset_name, scenario_name, config.seed)
    return {
        "engine_version": ENGINE_VERSION,
        "config": {
            "preset": preset_name,
            "scenario": scenario_name,
            "seed": config.seed,
            "building": asdict(config.building),
            "occupancy": asdict(config.occupancy),
        },
        "result": payload,
    }


def handle_indicators(body: Any) -> dict:
    body = _require_object(body)
    _check_unknown(
        body,
        {
            "savings",
            "baseline_result",
            "scenario_result",
            "baseline_consumption",
            "price_book",
            "scenario",
            "econ",
        },
        "request",
    )
    has_savings = "savings" in body
    has_results = "baseline_result" in body or "scenario_result" in body
    if has_savings and has_results:
        raise ApiError(400, "provide either 'savings' or the two result objects")
    if not has_savings and not has_results:
        raise ApiError(400, "missing input: 'savings' or result objects required")

    scenario_name = body.get("scenario")
    investment = 0.0
    if scenario_name is not None:
        if scenario_name not in SCENARIO_NAMES:
            raise ApiError(
                400,
                f"unknown scenario '{scenario_name}' (valid: {', '.join(SCENARIO_NAMES)})",
                ["scenario"],
            )
        investment = get_scenario(scenario_name).investment_eur

    if has_savings:
        savings = _parse_savings(body["savings"])
        base = body.get("baseline_consumption")
        if base is not None:
            base = _require_object(base)
            _check_unknown(base, {"electricity_kwh", "gas_kwh"}, "baseline_consumption")
            try:
                baseline = CarrierConsumption(
                    electricity_kwh=float(base.get("electricity_kwh", 0.0)),
                    gas_kwh=float(base.get("gas_kwh", 0.0)),
                )
            except ValueError as exc:
                raise ApiError(422, f"baseline_consumption: {exc}") from exc
        else:
            baseline = INJECTION_BASELINE
    else:
        if "baseline_result" not in body or "scenario_result" not in body:
            raise ApiError(400, "both baseline_result and scenario_result are required")
        try:
            ref = simulation_from_dict(_require_object(body["baseline_result"]), "baseline_result")
            res = simulation_from_dict(_require_object(body["scenario_result"]), "scenario_result")
        except ValueError as exc:
            raise ApiError(400, str(exc)) from exc
        savings = annual_energy_savings(ref, res)
        baseline = consumption_of(ref)

    book = _parse_book(body.get("price_book"))
    econ = _parse_econ(body.get("econ"), investment)
    report = report_from_savings(
        savings, baseline, scenario_name or "custom", book, econ
    )
    return {
        "engine_version": ENGINE_VERSION,
        "config": {
            "scenario": scenario_name,
            "price_book": book.country,
            "econ": asdict(econ),
            "baseline_consumption": asdict(baseline),
        },
        "report": report.to_json_dict(),
    }


def _tariff_dict(structure) -> dict:
    if isinstance(structure, FlatTariff):
        return {"type": "flat", "rate_eur_per_kwh": structure.rate_eur_per_kwh}
    assert isinstance(structure, BlockTariff)
    return {
        "type": "block",
        "threshold_kwh": structure.threshold_kwh,
        "low_rate_eur_per_kwh": structure.low_rate_eur_per_kwh,
        "high_rate_eur_per_kwh": structure.high_rate_eur_per_kwh,
        "periods_per_year": structure.periods_per_year,
    }


def handle_presets() -> dict:
    return {
        "engine_version": ENGINE_VERSION,
        "weather_presets": {name: asdict(p) for name, p in sorted(PRESETS.items())},
        "price_books": {
            name: {
                "country": book.country,
                "electricity": _tariff_dict(book.electricity),
                "gas": _tariff_dict(book.gas),
            }
            for name, book in sorted(PRICE_BOOKS.items())
        },
        "scenarios": [
            {
                "name": spec.name,
                "investment_eur": spec.investment_eur,
                "devices": list(spec.devices),
                "policy": {
                    "heat_setpoint": spec.policy.heat_setpoint,
                    "cool_setpoint": spec.policy.cool_setpoint,
                    "setback_heat": spec.policy.setback_heat,
                    "setback_cool": spec.policy.setback_cool,
                    "auto_away_delay": spec.policy.auto_away_delay,
                    "suggestion_offset": spec.policy.suggestion_offset,
                    "lighting_mode": spec.policy.lighting_mode.value,
                },
            }
            for spec in scenario_catalog()
        ],
        "emission_factors": [asdict(f) for f in EMISSION_FACTORS],
        "cities": [
            {
                "name": city,
                "weather_preset": CITY_PRESETS[city],
                "price_book": CITY_BOOKS[city],
            }
            for city in sorted(CITY_PRESETS)
        ],
        "reference_savings": [
            {
                "city": case.city,
                "scenario": case.scenario,
                "heating_kwh": case.heating_kwh,
                "cooling_kwh": case.cooling_kwh,
                "lighting_kwh": case.lighting_kwh,
            }
            for case in REFERENCE_CASES
        ],
        "defaults": {
            "seed": 42,
            "building": asdict(BuildingParams()),
            "econ": asdict(EconParams()),
            "injection_baseline": asdict(INJECTION_BASELINE),
        },
    }


SCHEMAS = {
    "simulate": {
        "type": "object",
        "properties": {
            "preset": {"type": "string", "enum": sorted(PRESETS)},
            "scenario": {"type": "string", "enum": list(SCENARIO_NAMES)},
            "seed": {"type": "integer"},
            "building": {"type": "object"},
            "occupancy": {"type": "object"},
        },
        "additionalProperties": False,
    },
    "indicators": {
        "type": "object",
        "properties": {
            "savings": {
                "type": "object",
                "properties": {
                    "heating_kwh": {"type": "number"},
                    "cooling_kwh": {"type": "number"},
                    "lighting_kwh": {"type": "number"},
                },
            },
            "baseline_result": {"type": "object"},
            "scenario_result": {"type": "object"},
            "baseline_consumption": {"type": "object"},
            "price_book": {"type": ["string", "object"]},
            "scenario": {"type": "string", "enum": list(SCENARIO_NAMES)},
            "econ": {
                "type": "object",
                "properties": {
                    "discount_rate": {"type": "number"},
                    "horizon_years": {"type": "integer"},
                    "investment_eur": {"type": "number"},
                },
            },
        },
        "additionalProperties": False,
    },
}


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"

    def log_message(self, format: str, *args) -> None:  # noqa: A002
        pass  # keep test output clean; stdlib logs every request otherwise

    def _send(self, status: int, payload: dict) -> None:
        body = (json.dumps(payload, indent=2) + "\n").encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.end_headers()
        self.wfile.write(body)

    def _send_error(self, status: int, message: str, fields: list[str]) -> None:
        self._send(
            status,
            {
                "engine_version": ENGINE_VERSION,
                "error": {"status": status, "message": message, "fields": fields},
            },
        )

    def do_OPTIONS(self) -> None:  # noqa: N802
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self) -> None:  # noqa: N802
        if self.path == "/healthz":
            self._send(200, {"status": "ok", "engine_version": ENGINE_VERSION})
        elif self.path == "/api/v1/presets":
            self._send(200, handle_presets())
        elif self.path == "/api/v1/schema":
            self._send(200, {"engine_version": ENGINE_VERSION, "schemas": SCHEMAS})
        else:
            self._send_error(404, f"no such path: {self.path}", [])

    def do_POST(self) -> None:  # noqa: N802
        handlers = {
            "/api/v1/simulate": handle_simulate,
            "/api/v1/indicators": handle_indicators,
        }
        handler = handlers.get(self.path)
        if handler is None:
            self._send_error(404, f"no such path: {self.path}", [])
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            raw = self.rfile.read(length) if length else b""
            try:
                body = json.loads(raw.decode("utf-8")) if raw else {}
            except (json.JSONDecodeError, UnicodeDecodeError) as exc:
                raise ApiError(400, f"invalid JSON body: {exc}") from exc
            self._send(200, handler(body))
        except ApiError as exc:
            self._send_error(exc.status, exc.message, exc.fields)
        except Exception as exc:  # pragma: no cover - defensive
            self._send_error(500, f"internal error: {exc}", [])


def build_server(port: int = DEFAULT_PORT) -> ThreadingHTTPServer:
    return ThreadingHTTPServer(("", port), _Handler)


def serve(port: int = DEFAULT_PORT) -> None:
    server = build_server(port)
    actual_port = server.server_address[1]
    print(f"serving on http://localhost:{actual_port}/api/v1 (Ctrl+C to stop)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
