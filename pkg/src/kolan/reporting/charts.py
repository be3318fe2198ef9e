"""Minimal SVG charts: horizontal bars and a PCA biplot.

Output depends only on the data passed in; coordinates are printed with two
decimals so reruns are byte-identical.
"""

from typing import List, Sequence, Tuple
from xml.sax.saxutils import escape

from ..metrics.engagement import ChartSeries, Scale

PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2")
FONT = 'font-family="sans-serif" font-size="12"'


def _n(value: float) -> str:
    text = f"{value:.2f}"
    return "0.00" if text == "-0.00" else text


def _svg(width: float, height: float, body: List[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_n(width)}" height="{_n(height)}" '
        f'viewBox="0 0 {_n(width)} {_n(height)}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def bar_chart(
    title: str,
    items: Sequence[Tuple[str, float]],
    axis_label: str = "",
    width: float = 640.0,
    bar_height: float = 22.0,
) -> str:
    """Horizontal bar chart, one bar per (label, value), top to bottom.

    Negative values (e.g. log10 of a ratio below 1) extend left of the zero
    line.
    """
    label_width, margin, top = 140.0, 20.0, 40.0
    plot_width = width - label_width - 2 * margin - 60.0
    height = top + bar_height * len(items) + 40.0

    values = [v for _, v in items]
    lo = min([0.0, *values])
    hi = max([0.0, *values])
    if hi == lo:
        hi = lo + 1.0

    def x_of(v: float) -> float:
        return label_width + margin + (v - lo) / (hi - lo) * plot_width

    zero = x_of(0.0)
    body = [
        f'<text x="{_n(width / 2)}" y="20.00" text-anchor="middle" {FONT}>{escape(title)}</text>',
        f'<line x1="{_n(zero)}" y1="{_n(top - 4)}" x2="{_n(zero)}" '
        f'y2="{_n(top + bar_height * len(items))}" stroke="#333"/>',
    ]
    for i, (label, value) in enumerate(items):
        y = top + i * bar_height
        x0, x1 = sorted((zero, x_of(value)))
        body.append(
            f'<text x="{_n(label_width + margin - 6)}" y="{_n(y + bar_height * 0.7)}" '
            f'text-anchor="end" {FONT}>{escape(label)}</text>'
        )
        body.append(
            f'<rect x="{_n(x0)}" y="{_n(y + 3)}" width="{_n(x1 - x0)}" '
            f'height="{_n(bar_height - 6)}" fill="{PALETTE[0]}"/>'
        )
        body.append(
            f'<text x="{_n(max(x1, zero) + 4)}" y="{_n(y + bar_height * 0.7)}" {FONT}>'
            f"{value:.3f}</text>"
        )
    if axis_label:
        body.append(
            f'<text x="{_n(width / 2)}" y="{_n(height - 12)}" text-anchor="middle" {FONT}>'
            f"{escape(axis_label)}</text>"
        )
    return _svg(width, height, body)


def series_chart(series: ChartSeries) -> str:
    """Bar chart of a ChartSeries in its display order."""
    axis = "log10(value)" if series.scale is Scale.LOG10 else "value"
    return bar_chart(series.label, list(series.points), axis_label=axis)


def biplot(
    points: Sequence[Tuple[str, float, float, int]],
    loadings: Sequence[Tuple[str, float, float]],
    explained: Tuple[float, float] = (0.0, 0.0),
    size: float = 560.0,
) -> str:
    """Scatter of PC1/PC2 scores coloured by cluster, with loading arrows.

    Args:
        points: (kol_id, pc1, pc2, cluster) rows
        loadings: (feature, pc1, pc2) rows; arrows are scaled to the score
            extent
        explained: Variance share of PC1 and PC2 for the axis titles
        size: Width and height in pixels
    """
    margin = 50.0
    extent = 1.1 * max([1.0] + [abs(v) for _, x, y, _ in points for v in (x, y)])
    half = (size - 2 * margin) / 2
    cx = cy = size / 2

    def px(x: float) -> float:
        return cx + x / extent * half

    def py(y: float) -> float:
        return cy - y / extent * half

    body = [
        f'<text x="{_n(cx)}" y="20.00" text-anchor="middle" {FONT}>'
        "KOL grouping on principal components</text>",
        f'<line x1="{_n(margin)}" y1="{_n(cy)}" x2="{_n(size - margin)}" y2="{_n(cy)}" '
        'stroke="#999"/>',
        f'<line x1="{_n(cx)}" y1="{_n(margin)}" x2="{_n(cx)}" y2="{_n(size - margin)}" '
        'stroke="#999"/>',
        f'<text x="{_n(cx)}" y="{_n(size - 14)}" text-anchor="middle" {FONT}>'
        f"PC1 ({explained[0] * 100:.1f}%)</text>",
        f'<text x="14.00" y="{_n(cy)}" text-anchor="middle" transform="rotate(-90 14.00 '
        f'{_n(cy)})" {FONT}>PC2 ({explained[1] * 100:.1f}%)</text>',
    ]

    arrow_scale = extent * 0.8
    for feature, lx, ly in loadings:
        x2, y2 = px(lx * arrow_scale), py(ly * arrow_scale)
        body.append(
            f'<line x1="{_n(cx)}" y1="{_n(cy)}" x2="{_n(x2)}" y2="{_n(y2)}" '
            'stroke="#555" stroke-dasharray="4 2"/>'
        )
        body.append(f'<text x="{_n(x2)}" y="{_n(y2)}" fill="#555" {FONT}>{escape(feature)}</text>')

    for kol_id, x, y, cluster in points:
        colour = PALETTE[cluster % len(PALETTE)]
        body.append(f'<circle cx="{_n(px(x))}" cy="{_n(py(y))}" r="5.00" fill="{colour}"/>')
        body.append(
            f'<text x="{_n(px(x) + 7)}" y="{_n(py(y) - 7)}" {FONT}>{escape(kol_id)}</text>'
        )
    return _svg(size, size, body)
