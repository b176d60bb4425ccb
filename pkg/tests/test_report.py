"""CSV, JSON, and plot-data serialization."""

import numpy as np
import pytest

from conftest import diamond_graph
from tricount.bench import MeasurementRecord, run_benchmark
from tricount.model import SOA_MODEL, compare, fit_power_law, reference_table
from tricount.report import (CSV_FIELDS, curves_to_plotdata, fit_from_json,
                             fit_to_json, measurements_from_csv,
                             measurements_to_csv, read_fit,
                             read_measurements, write_fit,
                             write_measurements)


def make_record(**overrides):
    base = dict(graph_name="g", algorithm="lu", num_vertices=4, n_e=5,
                nnz=10, trials=3, time_s_min=0.125, time_s_median=0.25,
                rate_eps=20.0, include_aux=False, n_t=2)
    base.update(overrides)
    return MeasurementRecord(**base)


class TestMeasurementCsv:
    def test_header_is_pinned(self):
        text = measurements_to_csv([])
        assert text == ("graph,algorithm,vertices,edges,nnz,trials,"
                        "time_s_min,time_s_median,rate_eps,n_t,include_aux\n")

    def test_round_trip_preserves_floats_bitwise(self):
        records = [run_benchmark(diamond_graph(), algo, trials=3,
                                 graph_name="diamond")
                   for algo in ("ae", "a2a", "lu")]
        parsed = measurements_from_csv(measurements_to_csv(records))
        assert len(parsed) == 3
        for got, want in zip(parsed, records):
            assert got.n_e == want.n_e
            assert got.time_s_min == want.time_s_min  # exact, not approx
            assert got.time_s_median == want.time_s_median
            assert got.rate_eps == want.rate_eps
            assert got.include_aux == want.include_aux
            assert got.n_t == want.n_t

    def test_awkward_float_survives(self):
        r = make_record(time_s_median=0.1 + 0.2, rate_eps=5 / (0.1 + 0.2))
        (parsed,) = measurements_from_csv(measurements_to_csv([r]))
        assert parsed.time_s_median == r.time_s_median
        assert parsed.rate_eps == r.rate_eps

    def test_file_round_trip(self, tmp_path):
        path = tmp_path / "m.csv"
        write_measurements([make_record()], path)
        (parsed,) = read_measurements(path)
        assert parsed.graph_name == "g"
        assert parsed.low_confidence is False  # not serialized

    def test_header_mismatch_rejected(self):
        with pytest.raises(ValueError):
            measurements_from_csv("a,b,c\n1,2,3\n")
        with pytest.raises(ValueError):
            measurements_from_csv("")

    def test_bad_bool_rejected(self):
        text = measurements_to_csv([make_record()]).replace("false", "maybe")
        with pytest.raises(ValueError):
            measurements_from_csv(text)

    def test_field_count_is_schema(self):
        assert len(CSV_FIELDS) == 11


class TestFitJson:
    def test_keys_mirror_fit_fields(self):
        import json
        fit = fit_power_law([(10.0 ** k, (10.0 ** k / 1e8) ** (4 / 3))
                             for k in range(4, 10)])
        data = json.loads(fit_to_json(fit))
        assert set(data) == {"alpha", "beta", "n1", "residual_rms",
                             "num_points", "snapped"}

    def test_round_trip(self, tmp_path):
        fit = fit_power_law([(1e5, 2.0), (1e6, 30.0), (1e7, 400.0)])
        path = tmp_path / "fit.json"
        write_fit(fit, path)
        back = read_fit(path)
        assert back == fit

    def test_missing_snapped_defaults_false(self):
        back = fit_from_json('{"alpha": 1.0, "beta": 1.0, "n1": 1.0, '
                             '"residual_rms": 0.0, "num_points": 2}')
        assert back.snapped is False


class TestPlotData:
    def test_series_blocks(self):
        curves = compare(None, reference_table(), np.logspace(4, 11, 5))
        text = curves_to_plotdata(curves, header_lines=["demo"])
        assert text.count("# series: ") == 12
        assert "# series: State-of-the-art" in text
        assert text.startswith("# demo\n")
        # data lines: 12 series x 5 grid points
        data_lines = [ln for ln in text.splitlines()
                      if ln and not ln.startswith("#")]
        assert len(data_lines) == 60
        assert all(len(ln.split()) == 4 for ln in data_lines)

    def test_values_parse_back(self):
        curves = compare(None, [SOA_MODEL], np.array([1e8]))
        text = curves_to_plotdata(curves)
        row = [ln for ln in text.splitlines() if not ln.startswith("#")][0]
        ne, t, rate, ratio = map(float, row.split())
        assert (ne, t, rate, ratio) == (1e8, 1.0, 1e8, 1.0)

    def test_empty(self):
        assert curves_to_plotdata([]) == ""
