"""
Result tables, CSV reports and SVG plots
"""

from .types import ResultRow, ErrorRow, StabilityRow, SummaryRow, ResultTable
from .summary import summarize
from .plots import render_metric_plot
from .emit import emit_report, format_cell, ReportError, RESULT_COLUMNS, SUMMARY_COLUMNS

__all__ = [
    "ResultRow",
    "ErrorRow",
    "StabilityRow",
    "SummaryRow",
    "ResultTable",
    "summarize",
    "render_metric_plot",
    "emit_report",
    "format_cell",
    "ReportError",
    "RESULT_COLUMNS",
    "SUMMARY_COLUMNS",
]
