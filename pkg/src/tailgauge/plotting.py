"""Self-contained SVG figures for experiment results."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

import numpy as np

from .errors import SpecError
from .experiments import ExperimentResult

WIDTH, HEIGHT = 640, 400
MARGIN = 50
KINDS = ("scatter", "histogram", "line")


class _Frame:
    """Linear map from data coordinates to the SVG plotting area."""

    def __init__(self, xlim, ylim):
        self.x0, self.x1 = _widen(*xlim)
        self.y0, self.y1 = _widen(*ylim)

    def px(self, x: float) -> float:
        return MARGIN + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - 2 * MARGIN)

    def py(self, y: float) -> float:
        return HEIGHT - MARGIN - (y - self.y0) / (self.y1 - self.y0) * (HEIGHT - 2 * MARGIN)


def _widen(lo: float, hi: float) -> tuple[float, float]:
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise SpecError("cannot plot non-finite values")
    if hi <= lo:
        pad = abs(lo) * 0.05 or 1.0
        return lo - pad, hi + pad
    return lo, hi


def _num(v: float) -> str:
    return f"{v:.2f}"


def _axes(frame: _Frame, xlabel: str, ylabel: str) -> list[str]:
    b = HEIGHT - MARGIN
    return [
        f'<path class="axis" d="M{MARGIN},{MARGIN} V{b} H{WIDTH - MARGIN}" fill="none" stroke="black"/>',
        f'<text x="{WIDTH / 2}" y="{HEIGHT - 12}" text-anchor="middle" font-size="12">{escape(xlabel)}</text>',
        f'<text x="14" y="{HEIGHT / 2}" text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 14 {HEIGHT / 2})">{escape(ylabel)}</text>',
        f'<text x="{MARGIN}" y="{b + 16}" font-size="10" text-anchor="middle">{frame.x0:.4g}</text>',
        f'<text x="{WIDTH - MARGIN}" y="{b + 16}" font-size="10" text-anchor="middle">{frame.x1:.4g}</text>',
        f'<text x="{MARGIN - 4}" y="{b}" font-size="10" text-anchor="end">{frame.y0:.4g}</text>',
        f'<text x="{MARGIN - 4}" y="{MARGIN + 4}" font-size="10" text-anchor="end">{frame.y1:.4g}</text>',
    ]


def _scatter(result: ExperimentResult) -> list[str]:
    xs = np.array([r[0] for r in result.rows])
    meta = result.metadata
    kappa = float(meta.get("kappa", 5.0))
    if "sigma_true" in meta:
        center, sigma = float(meta["mean_true"]), float(meta["sigma_true"])
    else:
        center, sigma = float(xs.mean()), float(xs.std())
    lo, hi = center - kappa * sigma, center + kappa * sigma
    span = max(np.max(np.abs(xs - center)), kappa * sigma) * 1.05
    frame = _Frame((center - span, center + span), (0, len(xs)))
    out = _axes(frame, "observation", "index")
    for i, x in enumerate(xs):
        out.append(f'<circle class="point" cx="{_num(frame.px(x))}" cy="{_num(frame.py(i))}" '
                   f'r="1.6" fill="#1f4fd1"/>')
    for pos in (lo, hi):
        X = _num(frame.px(pos))
        out.append(f'<line class="rule" x1="{X}" x2="{X}" y1="{MARGIN}" y2="{HEIGHT - MARGIN}" '
                   f'stroke="#c00" stroke-dasharray="4 3"/>')
    return out


def _histogram(result: ExperimentResult) -> list[str]:
    if result.histogram is None:
        raise SpecError("histogram plot needs a result with histogram bins")
    bins = result.histogram
    top = max(c for _, _, c in bins) or 1
    frame = _Frame((bins[0][0], bins[-1][1]), (0, top))
    out = _axes(frame, "scaled observation", "count")
    base = frame.py(0)
    for lo, hi, c in bins:
        x, w = frame.px(lo), frame.px(hi) - frame.px(lo)
        y = frame.py(c)
        out.append(f'<rect class="bar" x="{_num(x)}" y="{_num(y)}" width="{_num(w)}" '
                   f'height="{_num(base - y)}" fill="#7a9cd6" stroke="white" stroke-width="0.5"/>')
    return out


def _line(result: ExperimentResult) -> list[str]:
    xs = [r[0] for r in result.rows]
    ys = [r[1] for r in result.rows]
    frame = _Frame((min(xs), max(xs)), (0, max(ys) * 1.1 if max(ys) > 0 else 1))
    out = _axes(frame, "alpha" if result.name.startswith("fig4") else "x", "value")
    pts = " ".join(f"{_num(frame.px(x))},{_num(frame.py(y))}" for x, y in zip(xs, ys))
    out.append(f'<polyline class="curve" points="{pts}" fill="none" stroke="#1f4fd1" stroke-width="1.5"/>')
    for x, y in zip(xs, ys):
        out.append(f'<circle class="marker" cx="{_num(frame.px(x))}" cy="{_num(frame.py(y))}" r="3" fill="#1f4fd1"/>')
    return out


def render_svg(result: ExperimentResult, kind: str) -> str:
    """SVG document for ``result``: ``scatter`` (with the two +-kappa sigma
    rules), ``histogram`` (one bar per bin) or ``line``."""
    if not result.rows:
        raise SpecError("cannot render an empty result")
    if kind not in KINDS:
        raise SpecError(f"unknown plot kind {kind!r}; expected one of {KINDS}")
    body = {"scatter": _scatter, "histogram": _histogram, "line": _line}[kind](result)
    title = f"{result.name} (seed {result.seed})"
    return "\n".join([
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<title>{escape(title)}</title>",
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2}" y="24" text-anchor="middle" font-size="14">{escape(title)}</text>',
        *body,
        "</svg>",
        "",
    ])
