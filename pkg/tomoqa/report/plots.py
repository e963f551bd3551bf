"""
SVG line plots of summary rows, one polyline per method.

Points are the per-method means; vertical bars span mean +- sample variance.
"""

from typing import Dict, List, Sequence

from jinja2 import Environment, PackageLoader, select_autoescape

from .types import SummaryRow

WIDTH, HEIGHT = 520, 320
PLOT = {"left": 60, "right": 400, "top": 32, "bottom": 270}
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")

_env = Environment(
    loader=PackageLoader("tomoqa", "report/templates"),
    autoescape=select_autoescape(["svg"]),
)


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def render_metric_plot(rows: Sequence[SummaryRow], metric: str, title: str) -> str:
    """
    Render one metric ("rmse" or "ssim") of one experiment group.

    Args:
        rows: Summary rows of a single group, all on the same axis
        metric: Which mean/variance pair to plot
        title: Plot title
    """
    values: List[str] = []
    for row in rows:
        if row.value not in values:
            values.append(row.value)
    methods: List[str] = []
    for row in rows:
        if row.method not in methods:
            methods.append(row.method)

    def stats(row: SummaryRow):
        mean = getattr(row, f"{metric}_mean")
        var = getattr(row, f"{metric}_var_sample") or 0.0
        return mean, var

    lows = [stats(r)[0] - stats(r)[1] for r in rows]
    highs = [stats(r)[0] + stats(r)[1] for r in rows]
    y_min = min(0.0, min(lows, default=0.0))
    y_max = max(highs, default=1.0)
    if metric == "ssim":
        y_max = max(y_max, 1.0)
    if y_max <= y_min:
        y_max = y_min + 1.0

    span_x = PLOT["right"] - PLOT["left"]
    step = span_x / max(len(values), 1)
    x_pos = {v: PLOT["left"] + step * (k + 0.5) for k, v in enumerate(values)}

    def y_pos(value: float) -> float:
        fraction = (value - y_min) / (y_max - y_min)
        return PLOT["bottom"] - fraction * (PLOT["bottom"] - PLOT["top"])

    by_method: Dict[str, List[SummaryRow]] = {m: [] for m in methods}
    for row in rows:
        by_method[row.method].append(row)

    series = []
    for k, method in enumerate(methods):
        points, bars = [], []
        for row in sorted(by_method[method], key=lambda r: values.index(r.value)):
            mean, var = stats(row)
            x = x_pos[row.value]
            points.append(f"{_fmt(x)},{_fmt(y_pos(mean))}")
            bars.append({"x": _fmt(x), "low": _fmt(y_pos(mean - var)), "high": _fmt(y_pos(mean + var))})
        series.append({
            "name": method,
            "color": PALETTE[k % len(PALETTE)],
            "points": " ".join(points),
            "bars": bars,
        })

    y_ticks = []
    for f in (0.0, 0.25, 0.5, 0.75, 1.0):
        value = y_min + (y_max - y_min) * f
        y_ticks.append({"pos": _fmt(y_pos(value) + 4), "label": f"{value:.3g}"})
    x_ticks = [{"pos": _fmt(x_pos[v]), "label": v} for v in values]

    return _env.get_template("line_plot.svg").render(
        width=WIDTH,
        height=HEIGHT,
        plot=PLOT,
        title=title,
        x_label=rows[0].axis if rows else "",
        x_ticks=x_ticks,
        y_ticks=y_ticks,
        series=series,
    )
