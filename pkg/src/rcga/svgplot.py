"""Minimal self-contained SVG line plots (no plotting framework).

Renders mean curves with shaded +/-1 std bands, linear or log10 vertical
axis, ticks, legend and title. Output is deterministic for identical input.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"]

WIDTH, HEIGHT = 760, 480
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 78, 170, 46, 56


@dataclass(frozen=True)
class Series:
    """One curve: x positions, mean values and the half-width of its band."""

    label: str
    x: Sequence[float]
    mean: Sequence[float]
    std: Sequence[float]


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def _nice_step(span: float) -> float:
    raw = span / 5.0
    mag = 10.0 ** math.floor(math.log10(raw)) if raw > 0 else 1.0
    for mult in (1.0, 2.0, 5.0, 10.0):
        if raw <= mult * mag:
            return mult * mag
    return 10.0 * mag


def _linear_ticks(lo: float, hi: float) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    step = _nice_step(hi - lo)
    first = math.ceil(lo / step) * step
    ticks = []
    t = first
    while t <= hi + 1e-9 * step:
        ticks.append(0.0 if abs(t) < 1e-12 * step else t)
        t += step
    return ticks


def _log_ticks(lo: float, hi: float) -> list[float]:
    lo_e, hi_e = math.floor(math.log10(lo)), math.ceil(math.log10(hi))
    stride = max(1, (hi_e - lo_e) // 7)
    return [10.0**e for e in range(lo_e, hi_e + 1, stride)]


def _tick_label(v: float, log: bool) -> str:
    if log:
        return f"1e{int(round(math.log10(v)))}"
    if v != 0 and (abs(v) >= 1e4 or abs(v) < 1e-3):
        return f"{v:.0e}"
    return f"{v:g}"


class _Panel:
    """Coordinate mapping plus element accumulation for one chart."""

    def __init__(self, title, x_label, y_label, x_lo, x_hi, y_lo, y_hi, log_y):
        self.log_y = log_y
        self.x_lo, self.x_hi = x_lo, max(x_hi, x_lo + 1e-12)
        if log_y:
            self.y_lo, self.y_hi = math.log10(y_lo), math.log10(y_hi)
        else:
            self.y_lo, self.y_hi = y_lo, y_hi
        if self.y_hi - self.y_lo < 1e-12:
            self.y_hi = self.y_lo + 1.0
        self.body: list[str] = []
        self._chrome(title, x_label, y_label)

    def x_pix(self, x: float) -> float:
        frac = (x - self.x_lo) / (self.x_hi - self.x_lo)
        return MARGIN_L + frac * (WIDTH - MARGIN_L - MARGIN_R)

    def y_pix(self, y: float) -> float:
        v = math.log10(y) if self.log_y else y
        frac = (v - self.y_lo) / (self.y_hi - self.y_lo)
        return HEIGHT - MARGIN_B - frac * (HEIGHT - MARGIN_T - MARGIN_B)

    def clamp_y(self, y: float) -> float:
        if self.log_y:
            floor = 10.0**self.y_lo
            return floor if y < floor else y
        return y

    def _chrome(self, title, x_label, y_label):
        b = self.body
        b.append(f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>')
        x0, y0 = MARGIN_L, HEIGHT - MARGIN_B
        x1, y1 = WIDTH - MARGIN_R, MARGIN_T
        b.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>')
        b.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>')
        b.append(
            f'<text x="{(x0 + x1) / 2:.1f}" y="24" text-anchor="middle" '
            f'font-family="sans-serif" font-size="15" font-weight="bold">{title}</text>'
        )
        b.append(
            f'<text x="{(x0 + x1) / 2:.1f}" y="{HEIGHT - 14}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12">{x_label}</text>'
        )
        b.append(
            f'<text x="20" y="{(y0 + y1) / 2:.1f}" text-anchor="middle" font-family="sans-serif" '
            f'font-size="12" transform="rotate(-90 20 {(y0 + y1) / 2:.1f})">{y_label}</text>'
        )
        x_ticks = _linear_ticks(self.x_lo, self.x_hi)
        y_vals = _log_ticks(10.0**self.y_lo, 10.0**self.y_hi) if self.log_y else _linear_ticks(self.y_lo, self.y_hi)
        for t in x_ticks:
            px = self.x_pix(t)
            b.append(f'<line x1="{px:.1f}" y1="{y0}" x2="{px:.1f}" y2="{y0 + 5}" stroke="black"/>')
            b.append(
                f'<text x="{px:.1f}" y="{y0 + 19}" text-anchor="middle" '
                f'font-family="sans-serif" font-size="11">{_tick_label(t, False)}</text>'
            )
        for t in y_vals:
            py = self.y_pix(t)
            b.append(f'<line x1="{x0 - 5}" y1="{py:.1f}" x2="{x0}" y2="{py:.1f}" stroke="black"/>')
            b.append(f'<line x1="{x0}" y1="{py:.1f}" x2="{x1}" y2="{py:.1f}" stroke="#dddddd" stroke-width="0.5"/>')
            b.append(
                f'<text x="{x0 - 9}" y="{py + 4:.1f}" text-anchor="end" '
                f'font-family="sans-serif" font-size="11">{_tick_label(t, self.log_y)}</text>'
            )

    def add_series(self, s: Series, color: str):
        pts_hi = [(self.x_pix(x), self.y_pix(self.clamp_y(m + sd))) for x, m, sd in zip(s.x, s.mean, s.std)]
        pts_lo = [(self.x_pix(x), self.y_pix(self.clamp_y(m - sd))) for x, m, sd in zip(s.x, s.mean, s.std)]
        band = " ".join(f"{px:.2f},{py:.2f}" for px, py in pts_hi + pts_lo[::-1])
        self.body.append(f'<polygon points="{band}" fill="{color}" fill-opacity="0.15" stroke="none"/>')
        line = " ".join(f"{self.x_pix(x):.2f},{self.y_pix(self.clamp_y(m)):.2f}" for x, m in zip(s.x, s.mean))
        self.body.append(f'<polyline points="{line}" fill="none" stroke="{color}" stroke-width="1.6"/>')

    def add_legend(self, labels_colors):
        lx = WIDTH - MARGIN_R + 14
        for row, (label, color) in enumerate(labels_colors):
            ly = MARGIN_T + 14 + row * 20
            self.body.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 24}" y2="{ly}" stroke="{color}" stroke-width="2.5"/>')
            self.body.append(
                f'<text x="{lx + 30}" y="{ly + 4}" font-family="sans-serif" font-size="12">{label}</text>'
            )

    def render(self) -> str:
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}">'
        )
        return head + "\n" + "\n".join(self.body) + "\n</svg>\n"


def render_panel(title: str, x_label: str, y_label: str, series: Sequence[Series]) -> str:
    """Render one chart; log vertical axis iff every plotted value is positive."""
    if not series:
        raise ValueError("render_panel: no series to plot")
    log_y = all(m > 0.0 for s in series for m in s.mean)
    if log_y:
        # Band edges at or below zero are clamped to the axis floor.
        vals = [
            v
            for s in series
            for m, sd in zip(s.mean, s.std)
            for v in (m, m - sd, m + sd)
            if v > 0.0
        ]
    else:
        vals = [v for s in series for m, sd in zip(s.mean, s.std) for v in (m - sd, m + sd)]
    y_lo, y_hi = min(vals), max(vals)
    xs = [x for s in series for x in s.x]
    panel = _Panel(title, x_label, y_label, min(xs), max(xs), y_lo, y_hi, log_y)
    colors = []
    for idx, s in enumerate(series):
        color = PALETTE[idx % len(PALETTE)]
        panel.add_series(s, color)
        colors.append((s.label, color))
    panel.add_legend(colors)
    return panel.render()
