"""Minimal SVG rendering of an eigenvalue histogram with a density overlay.

No plotting dependency: the figure is a fixed 800x500 viewbox with one
rectangle per histogram bin and a single polyline for the reference
density, plus axis lines and tick labels.
"""
from __future__ import annotations

import numpy as np

from .spectra import HistogramTable

WIDTH, HEIGHT = 800, 500
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 62, 18, 26, 46


def _ticks(lo: float, hi: float, count: int = 5) -> np.ndarray:
    return np.linspace(lo, hi, count)


def render_figure_svg(
    hist: HistogramTable,
    curve_x: np.ndarray,
    curve_y: np.ndarray,
    title: str = "",
) -> str:
    """Histogram bars plus one density polyline in an 800x500 viewbox."""
    curve_x = np.asarray(curve_x, dtype=np.float64)
    curve_y = np.asarray(curve_y, dtype=np.float64)

    x_lo = min(float(hist.edges[0]), float(curve_x.min()))
    x_hi = max(float(hist.edges[-1]), float(curve_x.max()))
    y_hi = max(float(hist.density.max(initial=0.0)), float(curve_y.max(initial=0.0)))
    if x_hi <= x_lo:
        x_hi = x_lo + 1.0
    if y_hi <= 0.0:
        y_hi = 1.0
    y_hi *= 1.05

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def px(x: float) -> float:
        return MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y: float) -> float:
        return MARGIN_TOP + (1.0 - y / y_hi) * plot_h

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" '
        f'width="{WIDTH}" height="{HEIGHT}">',
    ]
    if title:
        parts.append(
            f'<text x="{WIDTH / 2:.1f}" y="17" text-anchor="middle" '
            f'font-family="sans-serif" font-size="13">{title}</text>'
        )

    for left, right, dens in zip(hist.bin_left, hist.bin_right, hist.density):
        x0 = px(float(left))
        w = max(px(float(right)) - x0, 0.0)
        y0 = py(float(dens))
        h = py(0.0) - y0
        parts.append(
            f'<rect x="{x0:.2f}" y="{y0:.2f}" width="{w:.2f}" height="{h:.2f}" '
            f'fill="#9ecbe3" stroke="#4a788c" stroke-width="0.7"/>'
        )

    pts = " ".join(
        f"{px(float(x)):.2f},{py(float(yv)):.2f}" for x, yv in zip(curve_x, curve_y)
    )
    parts.append(
        f'<polyline points="{pts}" fill="none" stroke="#1f4fa3" stroke-width="2"/>'
    )

    axis_y = py(0.0)
    parts.append(
        f'<line x1="{MARGIN_LEFT}" y1="{axis_y:.2f}" x2="{WIDTH - MARGIN_RIGHT}" '
        f'y2="{axis_y:.2f}" stroke="#222" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" '
        f'y2="{axis_y:.2f}" stroke="#222" stroke-width="1"/>'
    )
    for tick in _ticks(x_lo, x_hi):
        parts.append(
            f'<text x="{px(tick):.1f}" y="{axis_y + 18:.1f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{tick:.3g}</text>'
        )
    for tick in _ticks(0.0, y_hi / 1.05):
        parts.append(
            f'<text x="{MARGIN_LEFT - 6}" y="{py(tick) + 4:.1f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{tick:.3g}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
