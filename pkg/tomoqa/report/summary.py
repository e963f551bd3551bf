"""
Aggregation of result rows per experiment, phantom group, x-axis value and method
"""

from typing import Dict, List, Tuple

import numpy as np

from ..lib.phantom_spec import phantom_group
from .types import ResultRow, ResultTable, SummaryRow


def axis_of(kind: str, row: ResultRow) -> Tuple[str, str]:
    """(axis name, value label) a row is plotted against."""
    if kind == "underdetermined":
        return "views", str(row.views)
    if kind == "noise_eval":
        return "noise", "noisy" if row.noisy else "clean"
    return "size", str(row.size)


def _sample_variance(values: np.ndarray):
    return float(np.var(values, ddof=1)) if values.size > 1 else None


def summarize(table: ResultTable) -> List[SummaryRow]:
    """
    One row per (group, axis value, method).

    Rows are ordered by group, then by numeric axis value (size, views);
    anything else keeps its order of first appearance.
    """
    buckets: Dict[Tuple[str, str, str, str], List[ResultRow]] = {}
    for row in table.rows:
        axis, value = axis_of(table.kind, row)
        buckets.setdefault((phantom_group(row.phantom), axis, value, row.method), []).append(row)

    def order(key: Tuple[str, str, str, str]):
        group, axis, value, method = key
        position = int(value) if axis in ("size", "views") else 0
        return group, position

    summary = []
    for key in sorted(buckets, key=order):
        group, axis, value, method = key
        rows = buckets[key]
        rmse = np.array([r.rmse for r in rows])
        ssim = np.array([r.ssim for r in rows])
        summary.append(SummaryRow(
            experiment=table.experiment,
            group=group,
            axis=axis,
            value=value,
            method=method,
            count=len(rows),
            rmse_mean=float(rmse.mean()),
            rmse_var_sample=_sample_variance(rmse),
            ssim_mean=float(ssim.mean()),
            ssim_var_sample=_sample_variance(ssim),
        ))
    return summary
