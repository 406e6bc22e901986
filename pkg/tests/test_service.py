import json
import threading
import urllib.error
import urllib.request

import pytest

from homebenefits.service import build_server


@pytest.fixture(scope="module")
def base_url():
    server = build_server(port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    port = server.server_address[1]
    yield f"http://127.0.0.1:{port}"
    server.shutdown()
    server.server_close()
    thread.join(timeout=5)


def get(base_url, path):
    with urllib.request.urlopen(base_url + path) as resp:
        return resp.status, json.loads(resp.read().decode("utf-8"))


def post(base_url, path, body):
    req = urllib.request.Request(
        base_url + path,
        data=json.dumps(body).encode("utf-8"),
        headers={"Content-Type": "application/json"},
        method="POST",
    )
    try:
        with urllib.request.urlopen(req) as resp:
            return resp.status, json.loads(resp.read().decode("utf-8"))
    except urllib.error.HTTPError as exc:
        return exc.code, json.loads(exc.read().decode("utf-8"))


class TestHealthAndPresets:
    def test_healthz(self, base_url):
        status, body = get(base_url, "/healthz")
        assert status == 200
        assert body["status"] == "ok"

    def test_presets_carry_prices_and_costs(self, base_url):
        status, body = get(base_url, "/api/v1/presets")
        assert status == 200
        assert body["price_books"]["germany-2019"]["electricity"]["rate_eur_per_kwh"] == 0.3048
        extended = [s for s in body["scenarios"] if s["name"] == "extended"][0]
        assert extended["investment_eur"] == 528.35
        assert "stuttgart-cfb" in body["weather_presets"]
        assert len(body["emission_factors"]) == 10
        assert len(body["reference_savings"]) == 4
        assert {c["name"] for c in body["cities"]} == {"algiers", "stuttgart"}

    def test_presets_stable_across_calls(self, base_url):
        _, first = get(base_url, "/api/v1/presets")
        _, second = get(base_url, "/api/v1/presets")
        assert first == second

    def test_schema_published(self, base_url):
        status, body = get(base_url, "/api/v1/schema")
        assert status == 200
        assert "simulate" in body["schemas"] and "indicators" in body["schemas"]

    def test_unknown_path_is_404(self, base_url):
        status, body = post(base_url, "/api/v1/nope", {})
        assert status == 404


class TestSimulateEndpoint:
    def test_smoke(self, base_url):
        status, body = post(
            base_url,
            "/api/v1/simulate",
            {"preset": "algiers-csa", "scenario": "extended"},
        )
        assert status == 200
        result = body["result"]
        for field in ("heating_kwh", "cooling_kwh", "lighting_kwh"):
            assert field in result
        assert body["engine_version"]
        assert body["config"]["preset"] == "algiers-csa"

    def test_deterministic_for_same_body(self, base_url):
        body = {"preset": "stuttgart-cfb", "scenario": "low-cost", "seed": 5}
        first = post(base_url, "/api/v1/simulate", body)
        second = post(base_url, "/api/v1/simulate", body)
        assert first == second

    def test_unknown_scenario_is_400_listing_names(self, base_url):
        status, body = post(base_url, "/api/v1/simulate", {"scenario": "smart"})
        assert status == 400
        assert "baseline, low-cost, extended" in body["error"]["message"]

    def test_unknown_field_is_400(self, base_url):
        status, body = post(base_url, "/api/v1/simulate", {"scnario": "baseline"})
        assert status == 400
        assert "scnario" in body["error"]["message"]

    def test_semantically_invalid_building_is_422(self, base_url):
        status, body = post(
            base_url,
            "/api/v1/simulate",
            {"preset": "stuttgart-cfb", "building": {"ua": -5.0}},
        )
        assert status == 422

    def test_matches_cli_numbers(self, base_url, tmp_path, capsys):
        from homebenefits.cli import main

        out = tmp_path / "cli.json"
        main(
            [
                "simulate",
                "--weather",
                "algiers-csa",
                "--scenario",
                "extended",
                "--seed",
                "42",
                "--out",
                str(out),
            ]
        )
        capsys.readouterr()
        cli_data = json.loads(out.read_text())
        _, body = post(
            base_url,
            "/api/v1/simulate",
            {"preset": "algiers-csa", "scenario": "extended", "seed": 42},
        )
        for field in (
            "heating_kwh",
            "cooling_kwh",
            "lighting_kwh",
            "electricity_kwh",
            "gas_kwh",
            "total_kwh",
        ):
            assert body["result"][field] == cli_data[field]


class TestIndicatorsEndpoint:
    def test_reference_savings_payback(self, base_url):
        status, body = post(
            base_url,
            "/api/v1/indicators",
            {
                "savings": {"heating_kwh": 7403, "cooling_kwh": 2689, "lighting_kwh": 0},
                "price_book": "germany-2019",
                "scenario": "low-cost",
                "econ": {"discount_rate": 0.05, "horizon_years": 10},
            },
        )
        assert status == 200
        assert body["report"]["payback_years"] == pytest.approx(0.212, abs=1e-3)

    def test_zero_rate_npv_identity(self, base_url):
        status, body = post(
            base_url,
            "/api/v1/indicators",
            {
                "savings": {"heating_kwh": 1000, "cooling_kwh": 0, "lighting_kwh": 0},
                "price_book": "germany-2019",
                "econ": {"discount_rate": 0.0, "horizon_years": 10, "investment_eur": 100.0},
            },
        )
        assert status == 200
        report = body["report"]
        delta_oc = report["annual_cost_saving_eur"]
        assert report["npv_eur"] == pytest.approx(10 * delta_oc - 100.0, abs=0.01)

    def test_custom_book_negative_rate_is_422(self, base_url):
        status, body = post(
            base_url,
            "/api/v1/indicators",
            {
                "savings": {"heating_kwh": 100},
                "price_book": {
                    "electricity": {"type": "flat", "rate_eur_per_kwh": -0.3},
                    "gas": {"type": "flat", "rate_eur_per_kwh": 0.06},
                },
            },
        )
        assert status == 422

    def test_missing_input_is_400(self, base_url):
        status, body = post(base_url, "/api/v1/indicators", {"price_book": "germany-2019"})
        assert status == 400

    def test_results_pair_input(self, base_url):
        status, body = post(
            base_url,
            "/api/v1/indicators",
            {
                "baseline_result": {
                    "heating_kwh": 20000,
                    "cooling_kwh": 3000,
                    "lighting_kwh": 2500,
                },
                "scenario_result": {
                    "heating_kwh": 12597,
                    "cooling_kwh": 311,
                    "lighting_kwh": 2500,
                },
                "price_book": "germany-2019",
                "scenario": "low-cost",
            },
        )
        assert status == 200
        assert body["report"]["delta_e_annual_kwh"] == 10_092

    def test_invalid_json_body_is_400(self, base_url):
        req = urllib.request.Request(
            base_url + "/api/v1/indicators",
            data=b"{nope",
            headers={"Content-Type": "application/json"},
            method="POST",
        )
        try:
            with urllib.request.urlopen(req) as resp:
                status = resp.status
        except urllib.error.HTTPError as exc:
            status = exc.code
        assert status == 400


class TestCors:
    def test_options_preflight(self, base_url):
        req = urllib.request.Request(base_url + "/api/v1/simulate", method="OPTIONS")
        with urllib.request.urlopen(req) as resp:
            assert resp.status == 204
            assert resp.headers["Access-Control-Allow-Origin"] == "*"

    def test_cors_header_on_responses(self, base_url):
        with urllib.request.urlopen(base_url + "/healthz") as resp:
            assert resp.headers["Access-Control-Allow-Origin"] == "*"
