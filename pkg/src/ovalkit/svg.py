"""Minimal deterministic SVG writer for curve figures."""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import quoteattr

import numpy as np

from .geometry import Polyline

VIEWPORT = 800
MARGIN = 20


@dataclass(frozen=True)
class Stroke:
    color: str = "black"
    width: float = 1.5
    dash: str | None = None
    label: str | None = None


def _path_data(xy: np.ndarray, closed: bool) -> str:
    head = f"M{xy[0, 0]:.3f},{xy[0, 1]:.3f}"
    body = " ".join(f"L{x:.3f},{y:.3f}" for x, y in xy[1:])
    return f"{head} {body}{' Z' if closed else ''}"


def render_svg(layers: list[tuple[Polyline, Stroke]], size: int = VIEWPORT) -> str:
    """One <path> per polyline, scaled uniformly so the joint bounding box fills the viewport."""
    if not layers:
        raise ValueError("nothing to render")
    allxy = np.vstack([poly.xy for poly, _ in layers])
    lo, hi = allxy.min(axis=0), allxy.max(axis=0)
    span = float(max(hi - lo)) or 1.0
    scale = (size - 2 * MARGIN) / span
    center = (lo + hi) / 2.0

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
    ]
    for poly, stroke in layers:
        xy = (poly.xy - center) * scale
        # SVG y axis points down
        xy = np.column_stack([xy[:, 0] + size / 2.0, size / 2.0 - xy[:, 1]])
        attrs = [
            f'd="{_path_data(xy, poly.closed)}"',
            'fill="none"',
            f'stroke="{stroke.color}"',
            f'stroke-width="{stroke.width:g}"',
        ]
        if stroke.dash:
            attrs.append(f'stroke-dasharray="{stroke.dash}"')
        if stroke.label:
            attrs.append(f"data-label={quoteattr(stroke.label)}")
        lines.append(f"<path {' '.join(attrs)}/>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
