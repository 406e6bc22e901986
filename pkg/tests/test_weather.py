import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homebenefits.weather import (
    HOURS_PER_YEAR,
    PRESETS,
    ClimatePreset,
    MissingColumn,
    NonMonotonicHours,
    RecordCountNot8760,
    UnparsableNumber,
    WeatherSeries,
    load_weather_csv,
    synthesize_weather,
    write_weather_csv,
)


@pytest.fixture(scope="module")
def series():
    return synthesize_weather(PRESETS["stuttgart-cfb"], seed=7)


class TestSynthesize:
    def test_annual_mean_matches_preset(self, series):
        assert series.mean_temp() == pytest.approx(9.5, abs=0.1)

    def test_deterministic_for_same_inputs(self):
        a = synthesize_weather(PRESETS["algiers-csa"], seed=3)
        b = synthesize_weather(PRESETS["algiers-csa"], seed=3)
        assert np.array_equal(a.temp_c, b.temp_c)
        assert np.array_equal(a.ghi_wm2, b.ghi_wm2)

    def test_different_seeds_differ(self):
        a = synthesize_weather(PRESETS["algiers-csa"], seed=3)
        b = synthesize_weather(PRESETS["algiers-csa"], seed=4)
        assert not np.array_equal(a.temp_c, b.temp_c)

    def test_degenerate_amplitudes_give_constant_temperature(self):
        preset = ClimatePreset(
            name="flat",
            mean_annual_temp=11.0,
            seasonal_amplitude=0.0,
            diurnal_amplitude=0.0,
            peak_ghi=800.0,
            phase=20,
            noise_std=0.0,
        )
        out = synthesize_weather(preset, seed=0)
        assert np.all(out.temp_c == 11.0)

    @pytest.mark.parametrize("name", ["stuttgart-cfb", "algiers-csa"])
    @pytest.mark.parametrize("seed", [0, 11, 99])
    def test_coldest_day_near_phase(self, name, seed):
        # The hourly noise makes the raw argmin wander around the flat
        # seasonal minimum, so recover the seasonal phase by projecting the
        # series onto the annual harmonic and check that instead; the raw
        # argmin only gets a loose sanity bound.
        preset = PRESETS[name]
        out = synthesize_weather(preset, seed=seed)
        day = np.arange(len(out)) / 24.0
        omega = 2 * np.pi * day / 365.0
        a = 2.0 * np.mean(out.temp_c * np.cos(omega))
        b = 2.0 * np.mean(out.temp_c * np.sin(omega))
        fitted_min_day = (np.degrees(np.arctan2(-b, -a)) / 360.0 * 365.0) % 365 + 1

        def circ_dist(d1, d2):
            return min(abs(d1 - d2), 365 - abs(d1 - d2))

        assert circ_dist(fitted_min_day, preset.phase) <= 10
        coldest_day = int(np.argmin(out.temp_c)) // 24 + 1
        assert circ_dist(coldest_day, preset.phase) <= 45

    def test_ghi_nonnegative_and_dark_at_night(self, series):
        assert np.all(series.ghi_wm2 >= 0)
        midnight = series.ghi_wm2[0::24]
        assert np.all(midnight == 0)

    @settings(max_examples=15, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**31 - 1))
    def test_algiers_warmer_than_stuttgart_every_month(self, seed):
        algiers = synthesize_weather(PRESETS["algiers-csa"], seed=seed)
        stuttgart = synthesize_weather(PRESETS["stuttgart-cfb"], seed=seed)
        assert np.all(algiers.monthly_mean_temp() > stuttgart.monthly_mean_temp())


class TestSeriesInvariants:
    def test_series_is_immutable(self, series):
        with pytest.raises(ValueError):
            series.temp_c[0] = 1.0
        with pytest.raises(AttributeError):
            series.temp_c = np.zeros(HOURS_PER_YEAR)

    def test_wrong_length_rejected(self):
        with pytest.raises(RecordCountNot8760):
            WeatherSeries(np.zeros(100), np.zeros(100))

    def test_negative_ghi_rejected(self):
        ghi = np.zeros(HOURS_PER_YEAR)
        ghi[17] = -1.0
        with pytest.raises(UnparsableNumber, match="hour 17"):
            WeatherSeries(np.zeros(HOURS_PER_YEAR), ghi)

    def test_temperature_bounds_enforced(self):
        temp = np.zeros(HOURS_PER_YEAR)
        temp[5] = 99.0
        with pytest.raises(UnparsableNumber):
            WeatherSeries(temp, np.zeros(HOURS_PER_YEAR))


class TestCsvRoundTrip:
    def test_round_trip_is_identical(self, series, tmp_path):
        path = tmp_path / "weather.csv"
        write_weather_csv(series, path)
        reloaded = load_weather_csv(path)
        assert reloaded == series

    def test_valid_file_has_8760_records(self, series, tmp_path):
        path = tmp_path / "weather.csv"
        write_weather_csv(series, path)
        assert len(load_weather_csv(path)) == HOURS_PER_YEAR


class TestLoaderErrors:
    def _write(self, tmp_path, lines):
        path = tmp_path / "weather.csv"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    def test_short_file_rejected(self, series, tmp_path):
        path = tmp_path / "weather.csv"
        write_weather_csv(series, path)
        lines = path.read_text().splitlines()
        path.write_text("\n".join(lines[:-1]) + "\n")
        with pytest.raises(RecordCountNot8760, match="8759"):
            load_weather_csv(path)

    def test_bad_header_rejected(self, tmp_path):
        rows = ["time,temp,sun"] + [f"{h},10.0,0.0" for h in range(HOURS_PER_YEAR)]
        with pytest.raises(MissingColumn, match="line 1"):
            load_weather_csv(self._write(tmp_path, rows))

    def test_negative_ghi_names_line(self, tmp_path):
        rows = ["hour,temp_c,ghi_wm2"] + [f"{h},10.0,0.0" for h in range(HOURS_PER_YEAR)]
        rows[3] = "2,10.0,-5.0"  # hour 2 lives on line 4
        with pytest.raises(UnparsableNumber, match="line 4"):
            load_weather_csv(self._write(tmp_path, rows))

    def test_unparsable_number_names_line(self, tmp_path):
        rows = ["hour,temp_c,ghi_wm2"] + [f"{h},10.0,0.0" for h in range(HOURS_PER_YEAR)]
        rows[1] = "0,oops,0.0"
        with pytest.raises(UnparsableNumber, match="line 2"):
            load_weather_csv(self._write(tmp_path, rows))

    def test_non_monotonic_hours_rejected(self, tmp_path):
        rows = ["hour,temp_c,ghi_wm2"] + [f"{h},10.0,0.0" for h in range(HOURS_PER_YEAR)]
        rows[10] = "42,10.0,0.0"
        with pytest.raises(NonMonotonicHours, match="line 11"):
            load_weather_csv(self._write(tmp_path, rows))


class TestPresetValidation:
    def test_negative_amplitude_rejected(self):
        with pytest.raises(ValueError):
            ClimatePreset(
                name="bad",
                mean_annual_temp=10.0,
                seasonal_amplitude=-1.0,
                diurnal_amplitude=0.0,
                peak_ghi=800.0,
                phase=20,
            )

    def test_zero_peak_ghi_rejected(self):
        with pytest.raises(ValueError):
            ClimatePreset(
                name="bad",
                mean_annual_temp=10.0,
                seasonal_amplitude=1.0,
                diurnal_amplitude=0.0,
                peak_ghi=0.0,
                phase=20,
            )
