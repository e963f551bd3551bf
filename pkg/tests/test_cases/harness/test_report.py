"""
Report emission: CSV tables, summary statistics and SVG plots.
"""

import csv
import xml.etree.ElementTree as ET

import pytest

from tomoqa import create_all_methods, run_experiment, validate_config
from tomoqa.methods.types import MethodSettings
from tomoqa.report import (
    RESULT_COLUMNS,
    SUMMARY_COLUMNS,
    ErrorRow,
    ReportError,
    ResultRow,
    ResultTable,
    emit_report,
    format_cell,
    render_metric_plot,
    summarize,
)
from tomoqa.report.summary import axis_of
from tomoqa.types import EventTypes
from tests.test_cases.configs.experiments import noise_small, sweep_all_methods, sweep_classical
from tests.test_cases.lib import create_test_backends, extract_events


def _read_csv(path):
    with open(path, newline="") as f:
        return list(csv.reader(f))


def _row(**overrides):
    values = dict(
        experiment="exp", phantom="foam", size=4, views=4, method="pinv",
        seed=1, bits=1, rmse=0.5, ssim=0.25, residual=1.0, wall_time=0.01,
    )
    values.update(overrides)
    return ResultRow(**values)


class TestFormatCell:

    def test_values(self):
        assert format_cell(None) == ""
        assert format_cell(True) == "true"
        assert format_cell(False) == "false"
        assert format_cell(3) == "3"
        assert format_cell(0.1) == "0.10000000000000001"
        assert float(format_cell(1 / 3)) == 1 / 3


class TestSummary:

    def test_mean_and_sample_variance(self):
        table = ResultTable(experiment="exp", kind="size_sweep", rows=[
            _row(seed=1, rmse=0.2), _row(seed=2, rmse=0.4), _row(seed=3, rmse=0.6),
        ])
        (summary,) = summarize(table)
        assert summary.count == 3
        assert summary.rmse_mean == pytest.approx(0.4)
        assert summary.rmse_var_sample == pytest.approx(0.04)
        assert summary.group == "binary"
        assert (summary.axis, summary.value) == ("size", "4")

    def test_single_seed_has_no_variance(self):
        (summary,) = summarize(ResultTable(experiment="exp", kind="size_sweep", rows=[_row()]))
        assert summary.rmse_var_sample is None
        assert summary.ssim_var_sample is None

    def test_groups_and_numeric_order(self):
        table = ResultTable(experiment="exp", kind="size_sweep", rows=[
            _row(size=16, views=16), _row(size=4), _row(phantom="tree", size=8, views=8),
            _row(phantom="shepp_logan", bits=4),
        ])
        summary = summarize(table)
        assert [(s.group, s.value) for s in summary] == [
            ("binary", "4"), ("binary", "8"), ("binary", "16"), ("shepp_logan", "4"),
        ]

    def test_axis_by_kind(self):
        row = _row(views=2, noisy=True)
        assert axis_of("size_sweep", row) == ("size", "4")
        assert axis_of("underdetermined", row) == ("views", "2")
        assert axis_of("noise_eval", row) == ("noise", "noisy")


class TestEmitReport:

    def test_wall_clock_report_files(self, tmp_path):
        config = validate_config(sweep_classical)
        table = run_experiment(config, None, create_all_methods(None))
        written = emit_report(table, tmp_path / "out")

        names = sorted(p.name for p in written)
        assert names == sorted([
            "results.csv", "timings.csv", "errors.csv", "summary.csv",
            "sweep_classical_binary_rmse.svg", "sweep_classical_binary_ssim.svg",
        ])

        results = _read_csv(tmp_path / "out" / "results.csv")
        assert tuple(results[0]) == RESULT_COLUMNS + ("wall_time",)
        assert len(results) == 1 + 24

        errors = _read_csv(tmp_path / "out" / "errors.csv")
        assert errors == [["experiment", "phantom", "size", "views", "method", "seed", "noisy", "error"]]

        summary = _read_csv(tmp_path / "out" / "summary.csv")
        assert tuple(summary[0]) == SUMMARY_COLUMNS
        assert len(summary) == 1 + 2 * 3
        assert {row[5] for row in summary[1:]} == {"4"}

    def test_svg_is_well_formed(self, tmp_path):
        config = validate_config(sweep_classical)
        emit_report(run_experiment(config, None, create_all_methods(None)), tmp_path)

        root = ET.parse(tmp_path / "sweep_classical_binary_rmse.svg").getroot()
        assert root.tag.endswith("svg")
        series = [g for g in root.iter() if g.get("class") == "series"]
        assert [g.get("data-method") for g in series] == ["fbp", "sart", "pinv"]

    def test_noise_report_has_stability(self, tmp_path):
        config = validate_config(noise_small)
        table = run_experiment(config, None, create_all_methods(None))
        names = {p.name for p in emit_report(table, tmp_path)}

        assert "stability.csv" in names
        assert "noise_small_digits_ssim.svg" in names
        stability = _read_csv(tmp_path / "stability.csv")
        assert stability[0] == ["experiment", "phantom", "size", "views", "seed", "ratio"]
        assert len(stability) == 1 + 4

        summary = _read_csv(tmp_path / "summary.csv")
        assert {row[3] for row in summary[1:]} == {"clean", "noisy"}

    def test_iteration_mode_results_are_byte_identical(self, tmp_path):
        config = validate_config(sweep_all_methods)
        settings = MethodSettings(reads=config.reads, sweeps=config.sweeps, iterations=config.iterations)
        for name in ("a", "b"):
            table = run_experiment(config, None, create_all_methods(None, settings))
            emit_report(table, tmp_path / name)

        first = (tmp_path / "a" / "results.csv").read_bytes()
        assert first == (tmp_path / "b" / "results.csv").read_bytes()
        assert b"wall_time" not in first.splitlines()[0]
        assert (tmp_path / "a" / "summary.csv").read_bytes() == (tmp_path / "b" / "summary.csv").read_bytes()

    def test_error_rows_are_written(self, tmp_path):
        table = ResultTable(
            experiment="exp",
            kind="size_sweep",
            rows=[_row()],
            errors=[ErrorRow(
                experiment="exp", phantom="foam", size=8, views=8,
                method="qa", seed=1, error="SizeGuardError: too many variables",
            )],
        )
        emit_report(table, tmp_path)
        errors = _read_csv(tmp_path / "errors.csv")
        assert errors[1] == ["exp", "foam", "8", "8", "qa", "1", "false", "SizeGuardError: too many variables"]

    def test_report_written_event(self, tmp_path):
        backends = create_test_backends("report_event")
        config = validate_config(sweep_classical)
        table = run_experiment(config, backends, create_all_methods(backends))
        written = emit_report(table, tmp_path, backends)

        (event,) = extract_events(backends, table.execution_id, EventTypes.REPORT_WRITTEN)
        assert event["files"] == [p.name for p in written]
        backends.cleanup_all()

    def test_unwritable_directory(self, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("occupied")
        with pytest.raises(ReportError):
            emit_report(ResultTable(experiment="exp", kind="size_sweep"), blocker / "out")


class TestPlots:

    def test_plot_marks_every_method(self):
        table = ResultTable(experiment="exp", kind="underdetermined", rows=[
            _row(views=2, method="fbp"), _row(views=4, method="fbp"),
            _row(views=2, method="hybrid"), _row(views=4, method="hybrid"),
        ])
        svg = render_metric_plot(summarize(table), "ssim", "exp binary: SSIM by views")
        root = ET.fromstring(svg.encode("utf-8"))
        assert "exp binary: SSIM by views" in svg
        assert sum(1 for g in root.iter() if g.get("class") == "series") == 2
