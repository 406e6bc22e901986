"""Command-line interface: simulate, indicators, compare, serve.

Exit codes: 0 success, 2 configuration problem, 3 I/O problem. Output files
are byte-deterministic for identical configs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .benchmarks import (
    CITY_BOOKS,
    CITY_PRESETS,
    INJECTION_BASELINE,
    REFERENCE_CASES,
    reference_comparison,
    reference_report,
)
from .config import (
    ConfigError,
    RunConfig,
    load_config_data,
    make_profile,
    make_weather,
    parse_price_book,
    run_config_from_dict,
    weather_source_name,
)
from .indicators import (
    EconParams,
    EnergySavings,
    IndicatorReport,
    annual_energy_savings,
    consumption_of,
    report_from_savings,
)
from .scenarios import SCENARIO_NAMES, get_scenario
from .serialize import (
    dump_csv,
    dump_json,
    simulation_csv_rows,
    simulation_dict,
    simulation_from_dict,
)
from .tariff import CarrierConsumption
from .thermal import simulate_year

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="TOML or JSON config file")
    parser.add_argument("--seed", type=int, help="override the run seed")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--out", help="output file (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homebenefits",
        description=(
            "Simulate smart-home control scenarios for a single-family house "
            "and compute homeowner benefit indicators."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="run one scenario for one year")
    _common_flags(p_sim)
    p_sim.add_argument("--weather", help="weather preset name")
    p_sim.add_argument("--weather-csv", help="weather CSV file (hour,temp_c,ghi_wm2)")
    p_sim.add_argument("--scenario", help=f"one of: {', '.join(SCENARIO_NAMES)}")
    p_sim.add_argument("--trace", help="write the 8760-row hourly trace CSV here")

    p_ind = sub.add_parser("indicators", help="compute the benefit indicator report")
    _common_flags(p_ind)
    p_ind.add_argument("--baseline", help="simulate output JSON of the reference run")
    p_ind.add_argument("--result", help="simulate output JSON of the scenario run")
    p_ind.add_argument(
        "--inject-savings",
        help="JSON file with annual savings, bypassing simulation",
    )
    p_ind.add_argument(
        "--paper-fixtures",
        action="store_true",
        help="evaluate the bundled reference rows under both price books "
        "and print the computed-vs-published comparison table",
    )
    p_ind.add_argument("--scenario", help="scenario name (supplies the investment)")
    p_ind.add_argument("--investment", type=float, help="investment in EUR")
    p_ind.add_argument("--book", help="price book preset name")
    p_ind.add_argument("--discount-rate", type=float, help="per-year discount rate")
    p_ind.add_argument("--horizon", type=int, help="analysis horizon in years")

    p_cmp = sub.add_parser("compare", help="cross-city, cross-scenario comparison CSV")
    _common_flags(p_cmp)
    p_cmp.add_argument(
        "--fixtures",
        action="store_true",
        help="use the bundled reference savings instead of simulating",
    )
    p_cmp.add_argument(
        "--cities",
        default="algiers-csa,stuttgart-cfb",
        help="comma-separated weather presets",
    )
    p_cmp.add_argument(
        "--scenarios",
        default=",".join(SCENARIO_NAMES),
        help="comma-separated scenario names",
    )
    p_cmp.add_argument("--discount-rate", type=float, help="per-year discount rate")
    p_cmp.add_argument("--horizon", type=int, help="analysis horizon in years")

    p_srv = sub.add_parser("serve", help="run the HTTP API")
    p_srv.add_argument("--port", type=int, default=8080)

    return parser


def _load_run_config(args: argparse.Namespace, **extra) -> RunConfig:
    data = load_config_data(args.config) if args.config else {}
    return run_config_from_dict(data, seed=args.seed, **extra)


def _emit(args: argparse.Namespace, payload: dict, csv_rows: list[list[str]]) -> None:
    if args.format == "csv":
        text = dump_csv(csv_rows, args.out)
    else:
        text = dump_json(payload, args.out)
    if args.out is None:
        sys.stdout.write(text)


def cmd_simulate(args: argparse.Namespace) -> int:
    config = _load_run_config(
        args,
        weather_preset=args.weather,
        weather_csv=args.weather_csv,
        scenario=args.scenario,
    )
    weather = make_weather(config)
    profile = make_profile(config)
    spec = get_scenario(config.scenario)
    result = simulate_year(
        weather,
        profile,
        spec.policy,
        config.building,
        keep_trace=args.trace is not None,
    )
    if args.trace is not None:
        result.write_trace_csv(args.trace)
    payload = simulation_dict(result, weather_source_name(config), spec.name, config.seed)
    _emit(args, payload, simulation_csv_rows(payload))
    return EXIT_OK


def _econ_from_args(args: argparse.Namespace, investment: float) -> EconParams:
    base = EconParams()
    return EconParams(
        discount_rate=base.discount_rate if args.discount_rate is None else args.discount_rate,
        horizon_years=base.horizon_years if args.horizon is None else args.horizon,
        investment_eur=investment,
    )


def _fixtures_table(args: argparse.Namespace) -> int:
    econ = _econ_from_args(args, 0.0)
    rows = reference_comparison(econ=econ)
    csv_rows = [
        [
            "city",
            "scenario",
            "payback_years",
            "payback_years_published",
            "npv_eur",
            "npv_eur_published",
            "irr_pct",
            "irr_pct_published",
        ]
    ]
    for row in rows:
        csv_rows.append(
            [
                row["city"],
                row["scenario"],
                f"{row['payback_years']:.3f}",
                f"{row['payback_years_published']:.3f}",
                f"{row['npv_eur']:.2f}",
                f"{row['npv_eur_published']:.2f}",
                f"{row['irr_pct']:.1f}",
                f"{row['irr_pct_published']:.1f}",
            ]
        )
    _emit(args, {"reference_comparison": rows}, csv_rows)
    return EXIT_OK


def cmd_indicators(args: argparse.Namespace) -> int:
    if args.paper_fixtures:
        if args.baseline or args.result or args.inject_savings:
            raise ConfigError("--paper-fixtures cannot be combined with other inputs")
        return _fixtures_table(args)

    injected = args.inject_savings is not None
    simulated = args.baseline is not None or args.result is not None
    if injected and simulated:
        raise ConfigError(
            "injected savings and simulation results are mutually exclusive"
        )
    if not injected and not simulated:
        raise ConfigError(
            "indicators needs --baseline/--result files, --inject-savings, "
            "or --paper-fixtures"
        )

    config_data = load_config_data(args.config) if args.config else {}
    book_spec = args.book or config_data.get("price_book", "germany-2019")
    book = parse_price_book(book_spec)
    if isinstance(book, str):
        book = _book_for(book)

    if injected:
        data = _read_json(args.inject_savings)
        savings = EnergySavings(
            heating_kwh=float(data.get("heating_kwh", 0.0)),
            cooling_kwh=float(data.get("cooling_kwh", 0.0)),
            lighting_kwh=float(data.get("lighting_kwh", 0.0)),
        )
        base = data.get("baseline")
        baseline = (
            CarrierConsumption(
                electricity_kwh=float(base["electricity_kwh"]),
                gas_kwh=float(base["gas_kwh"]),
            )
            if base
            else INJECTION_BASELINE
        )
        scenario_name = args.scenario or str(data.get("scenario", "injected"))
    else:
        if not (args.baseline and args.result):
            raise ConfigError("both --baseline and --result are required")
        ref = simulation_from_dict(_read_json(args.baseline), args.baseline)
        res_data = _read_json(args.result)
        res = simulation_from_dict(res_data, args.result)
        savings = annual_energy_savings(ref, res)
        baseline = consumption_of(ref)
        scenario_name = args.scenario or str(res_data.get("scenario", "scenario"))

    if args.investment is not None:
        investment = args.investment
    elif scenario_name in SCENARIO_NAMES:
        investment = get_scenario(scenario_name).investment_eur
    else:
        investment = 0.0

    econ = _econ_from_args(args, investment)
    report = report_from_savings(savings, baseline, scenario_name, book, econ)
    if report.degenerate:
        print(
            f"note: degenerate report ({report.payback_status}); "
            "payback is undefined",
            file=sys.stderr,
        )
    _emit(args, report.to_json_dict(), _report_csv_rows(report, None, None))
    return EXIT_OK


def _report_csv_rows(
    report: IndicatorReport, city: Optional[str], scenario: Optional[str]
) -> list[list[str]]:
    rows = report.to_csv_rows()
    if city is None:
        return rows
    out = [["city", "scenario", "indicator", "value", "unit"]]
    for row in rows[1:]:
        out.append([city, scenario or report.scenario, *row])
    return out


def cmd_compare(args: argparse.Namespace) -> int:
    csv_rows: list[list[str]] = [["city", "scenario", "indicator", "value", "unit"]]
    runs = 0

    if args.fixtures:
        econ0 = _econ_from_args(args, 0.0)
        for city in ("algiers", "stuttgart"):
            zero = report_from_savings(
                EnergySavings(),
                INJECTION_BASELINE,
                "baseline",
                _book_for(CITY_BOOKS[city]),
                _econ_from_args(args, 0.0),
            )
            csv_rows.extend(_compare_rows(city, "baseline", zero))
            runs += 1
            for case in REFERENCE_CASES:
                if case.city != city:
                    continue
                report = reference_report(case, econ=econ0)
                csv_rows.extend(_compare_rows(city, case.scenario, report))
                runs += 1
    else:
        cities = [c.strip() for c in args.cities.split(",") if c.strip()]
        scenario_names = [s.strip() for s in args.scenarios.split(",") if s.strip()]
        preset_books = {preset: CITY_BOOKS[city] for city, preset in CITY_PRESETS.items()}
        for preset in cities:
            config = _load_run_config(args, weather_preset=preset, scenario="baseline")
            weather = make_weather(config)
            profile = make_profile(config)
            book_name = preset_books.get(preset)
            book = _book_for(book_name) if book_name else config.resolved_price_book()
            base_result = simulate_year(
                weather, profile, get_scenario("baseline").policy, config.building
            )
            for name in scenario_names:
                spec = get_scenario(name)
                if name == "baseline":
                    result = base_result
                else:
                    result = simulate_year(weather, profile, spec.policy, config.building)
                econ = _econ_from_args(args, spec.investment_eur)
                report = report_from_savings(
                    annual_energy_savings(base_result, result),
                    consumption_of(base_result),
                    name,
                    book,
                    econ,
                )
                csv_rows.extend(_compare_rows(preset, name, report))
                runs += 1

    if runs < 2:
        raise ConfigError("compare needs at least two runs")
    text = dump_csv(csv_rows, args.out)
    if args.out is None:
        sys.stdout.write(text)
    return EXIT_OK


def _book_for(name: str):
    from .tariff import get_price_book

    return get_price_book(name)


def _compare_rows(city: str, scenario: str, report: IndicatorReport) -> list[list[str]]:
    return _report_csv_rows(report, city, scenario)[1:]


def cmd_serve(args: argparse.Namespace) -> int:
    from .service import serve

    serve(port=args.port)
    return EXIT_OK


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON: {exc}") from exc


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "simulate": cmd_simulate,
        "indicators": cmd_indicators,
        "compare": cmd_compare,
        "serve": cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except (ConfigError, KeyError, ValueError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
