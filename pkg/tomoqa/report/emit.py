"""
Result persistence: CSV tables and per-group SVG plots.

    results.csv    one row per completed run (wall_time only in wall-clock mode)
    timings.csv    wall time of every completed run
    errors.csv     one row per failed run
    summary.csv    mean and sample variance per group, axis value and method
    stability.csv  stability ratios (noise experiments)
    <experiment>_<group>_{rmse,ssim}.svg
"""

import csv
from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence, Union

from ..lib.register_event import register_event
from ..types import Backends, EventTypes, TomoqaError
from .plots import render_metric_plot
from .summary import summarize
from .types import RESULT_KEY_COLUMNS, ResultTable, SummaryRow

RESULT_COLUMNS = RESULT_KEY_COLUMNS + ("bits", "rmse", "ssim", "residual")
SUMMARY_COLUMNS = (
    "experiment", "group", "axis", "value", "method", "count",
    "rmse_mean", "rmse_var_sample", "ssim_mean", "ssim_var_sample",
)


class ReportError(TomoqaError):
    """Raised when the report cannot be written"""
    pass


def format_cell(value: Any) -> str:
    """CSV cell text: floats with 17 significant digits, booleans lowercase, None empty."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def _write_csv(path: Path, columns: Sequence[str], records: Iterable[Any]) -> Path:
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(columns)
        for record in records:
            writer.writerow([format_cell(getattr(record, c)) for c in columns])
    return path


def emit_report(
    table: ResultTable,
    outdir: Union[str, Path],
    backends: Optional[Backends] = None,
) -> List[Path]:
    """
    Write every report file of a table into outdir.

    Args:
        table: Results of one experiment
        outdir: Output directory, created if missing
        backends: Telemetry for the report_written event (optional)

    Returns:
        Paths of the written files

    Raises:
        ReportError: If the directory cannot be created or written
    """
    out = Path(outdir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        written = _emit(table, out)
    except OSError as e:
        raise ReportError(f"cannot write report to '{out}': {e}") from e

    if table.execution_id is not None:
        register_event(backends, table.execution_id, EventTypes.REPORT_WRITTEN, {
            "output_dir": str(out),
            "files": [p.name for p in written],
        })
    return written


def _emit(table: ResultTable, out: Path) -> List[Path]:
    result_columns = RESULT_COLUMNS if table.deterministic else RESULT_COLUMNS + ("wall_time",)
    written = [
        _write_csv(out / "results.csv", result_columns, table.rows),
        _write_csv(out / "timings.csv", RESULT_KEY_COLUMNS + ("wall_time",), table.rows),
        _write_csv(out / "errors.csv", RESULT_KEY_COLUMNS + ("error",), table.errors),
    ]

    summary = summarize(table)
    written.append(_write_csv(out / "summary.csv", SUMMARY_COLUMNS, summary))

    if table.stability:
        written.append(_write_csv(
            out / "stability.csv",
            ("experiment", "phantom", "size", "views", "seed", "ratio"),
            table.stability,
        ))

    groups: List[str] = []
    for row in summary:
        if row.group not in groups:
            groups.append(row.group)
    for group in groups:
        rows: List[SummaryRow] = [r for r in summary if r.group == group]
        for metric in ("rmse", "ssim"):
            path = out / f"{table.experiment}_{group}_{metric}.svg"
            title = f"{table.experiment} {group}: {metric.upper()} by {rows[0].axis}"
            path.write_text(render_metric_plot(rows, metric, title), encoding="utf-8")
            written.append(path)
    return written
