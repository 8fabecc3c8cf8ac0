"""Standalone SVG plots of orbits.

Two kinds: ``series`` draws the real and imaginary parts against the iterate
index as two polylines, ``scatter`` draws one small circle per point in the
complex plane.  Output is a pure function of the data and the
:class:`PlotSpec`, so files can be diffed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from xml.sax.saxutils import escape

import numpy as np

REAL_COLOR = "#1a9641"
IMAG_COLOR = "#2c7bb6"
MARKER_COLOR = "#222222"


class PlotKind(enum.Enum):
    SERIES = "series"
    SCATTER = "scatter"


@dataclass(frozen=True)
class PlotSpec:
    kind: PlotKind = PlotKind.SERIES
    width: int = 800
    height: int = 500
    marker_radius: float = 0.5
    stroke_width: float = 1.0
    x_range: tuple[float, float] | None = None
    y_range: tuple[float, float] | None = None
    title: str | None = None

    def __post_init__(self):
        if not isinstance(self.kind, PlotKind):
            object.__setattr__(self, "kind", PlotKind(self.kind))
        if self.width <= 0 or self.height <= 0:
            raise ValueError("plot dimensions must be positive")
        if self.marker_radius <= 0 or self.stroke_width <= 0:
            raise ValueError("marker radius and stroke width must be positive")
        for r in (self.x_range, self.y_range):
            if r is not None and not (np.isfinite(r).all() and r[1] > r[0]):
                raise ValueError(f"fixed range {r} must be finite with hi > lo")


def _extent(lo: float, hi: float) -> tuple[float, float]:
    """Pad ``[lo, hi]`` by 5% per side; a zero span becomes unit width."""
    span = hi - lo
    if span == 0:
        return lo - 0.5, hi + 0.5
    return lo - 0.05 * span, hi + 0.05 * span


def _fmt(v: float) -> str:
    return f"{v:.2f}"


class _Frame:
    def __init__(self, p: PlotSpec, xr, yr):
        self.p, self.x0, self.x1, self.y0, self.y1 = p, *xr, *yr

    def x(self, v):
        return (np.asarray(v, dtype=float) - self.x0) / (self.x1 - self.x0) * self.p.width

    def y(self, v):
        return self.p.height - (np.asarray(v, dtype=float) - self.y0) / (self.y1 - self.y0) * self.p.height


def _polyline(xs, ys, color, width) -> str:
    pts = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in zip(xs, ys))
    return f'<polyline fill="none" stroke="{color}" stroke-width="{width}" points="{pts}"/>'


def _header(p: PlotSpec, frame: _Frame, xlabel: str, ylabel: str) -> list[str]:
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{p.width}" height="{p.height}" '
        f'viewBox="0 0 {p.width} {p.height}">',
        f'<rect width="{p.width}" height="{p.height}" fill="white"/>',
    ]
    if p.title:
        out.append(f"<title>{escape(p.title)}</title>")
    out.append(
        f"<desc>{escape(xlabel)} [{frame.x0:.6g}, {frame.x1:.6g}]; "
        f"{escape(ylabel)} [{frame.y0:.6g}, {frame.y1:.6g}]</desc>"
    )
    # axes through zero when zero is in view
    if frame.y0 < 0 < frame.y1:
        y = _fmt(float(frame.y(0.0)))
        out.append(f'<line x1="0" y1="{y}" x2="{p.width}" y2="{y}" stroke="#bbbbbb" stroke-width="0.5"/>')
    if frame.x0 < 0 < frame.x1:
        x = _fmt(float(frame.x(0.0)))
        out.append(f'<line x1="{x}" y1="0" x2="{x}" y2="{p.height}" stroke="#bbbbbb" stroke-width="0.5"/>')
    return out


def render_plot(data, p: PlotSpec = PlotSpec()) -> str:
    """Render complex ``data`` (a 1-D sequence) as an SVG document string.

    Raises
    ------
    ValueError
        If ``data`` is empty or not finite.
    """
    z = np.asarray(data, dtype=complex).ravel()
    if z.size == 0:
        raise ValueError("nothing to plot: no points")
    if not np.isfinite(z).all():
        raise ValueError("cannot plot non-finite points")

    if p.kind is PlotKind.SERIES:
        idx = np.arange(1, z.size + 1, dtype=float)
        xr = p.x_range or _extent(1.0, float(z.size))
        both = np.concatenate([z.real, z.imag])
        yr = p.y_range or _extent(float(both.min()), float(both.max()))
        frame = _Frame(p, xr, yr)
        body = _header(p, frame, "n", "value")
        xs = frame.x(idx)
        body.append(_polyline(xs, frame.y(z.real), REAL_COLOR, p.stroke_width))
        body.append(_polyline(xs, frame.y(z.imag), IMAG_COLOR, p.stroke_width))
    else:
        xr = p.x_range or _extent(float(z.real.min()), float(z.real.max()))
        yr = p.y_range or _extent(float(z.imag.min()), float(z.imag.max()))
        frame = _Frame(p, xr, yr)
        body = _header(p, frame, "re", "im")
        r = f"{p.marker_radius:g}"
        body.append(f'<g fill="{MARKER_COLOR}" stroke="none">')
        body.extend(
            f'<circle cx="{_fmt(a)}" cy="{_fmt(b)}" r="{r}"/>'
            for a, b in zip(frame.x(z.real), frame.y(z.imag))
        )
        body.append("</g>")
    body.append("</svg>")
    return "\n".join(body) + "\n"
