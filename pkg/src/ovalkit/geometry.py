"""Point samples of ovals and the numeric oracles used to check closed forms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import OpenPolyline
from .support_fourier import TWO_PI, TrigSeries

RENDER_SAMPLES = 4096
ORACLE_SAMPLES = 100_000


@dataclass(frozen=True)
class PlanarPoint:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("point coordinates must be finite")


@dataclass(frozen=True, eq=False)
class Polyline:
    """Ordered vertices stored as an (N, 2) array."""

    xy: np.ndarray
    closed: bool = True

    def __post_init__(self):
        xy = np.asarray(self.xy, dtype=float)
        if xy.ndim != 2 or xy.shape[1] != 2:
            raise ValueError("xy must have shape (N, 2)")
        if self.closed and len(xy) < 3:
            raise ValueError("a closed polyline needs at least 3 points")
        object.__setattr__(self, "xy", xy)

    @classmethod
    def from_points(cls, points, closed: bool = True) -> Polyline:
        return cls(np.array([(p.x, p.y) for p in points], dtype=float), closed)

    @property
    def points(self) -> list[PlanarPoint]:
        return [PlanarPoint(float(x), float(y)) for x, y in self.xy]

    def __len__(self) -> int:
        return len(self.xy)


def support_curve_xy(series: TrigSeries, theta) -> np.ndarray:
    """(p cos - p' sin, p sin + p' cos); works for any support-like series."""
    theta = np.asarray(theta, dtype=float)
    p, dp = series.values(theta, (0, 1))
    c, s = np.cos(theta), np.sin(theta)
    return np.stack([p * c - dp * s, p * s + dp * c], axis=-1)


def curve_point(support: TrigSeries, theta: float) -> PlanarPoint:
    x, y = support_curve_xy(support, theta)
    return PlanarPoint(float(x), float(y))


def sample_thetas(count: int, span: float = TWO_PI) -> np.ndarray:
    return np.arange(count) * (span / count)


def sample_curve(support: TrigSeries, count: int) -> Polyline:
    if count < 3:
        raise ValueError("count must be >= 3")
    return Polyline(support_curve_xy(support, sample_thetas(count)), closed=True)


def polyline_signed_area(poly: Polyline) -> float:
    """Shoelace area; positive for counter-clockwise traversal."""
    if not poly.closed:
        raise OpenPolyline("signed area needs a closed polyline")
    x, y = poly.xy[:, 0], poly.xy[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def polyline_length(poly: Polyline) -> float:
    xy = poly.xy
    if poly.closed:
        xy = np.vstack([xy, xy[:1]])
    return float(np.sum(np.hypot(*np.diff(xy, axis=0).T)))


def integrate_periodic(f: Callable, count: int, rule: str = "simpson") -> float:
    """Integral of a 2pi-periodic ``f`` over [0, 2pi].

    ``f`` is called once with the array of nodes.  ``"trapezoid"`` is exact for
    trigonometric polynomials of degree < count/2; ``"simpson"`` is the
    composite Simpson rule used for non-smooth integrands.
    """
    if count < 8 or count % 2:
        raise ValueError("count must be even and >= 8")
    h = TWO_PI / count
    vals = np.asarray(f(sample_thetas(count)), dtype=float)
    if rule == "trapezoid":
        return float(h * vals.sum())
    if rule == "simpson":
        # periodic closure: node 0 doubles as node `count`
        return float(h / 3.0 * (2.0 * vals[0::2].sum() + 4.0 * vals[1::2].sum()))
    raise ValueError(f"unknown rule {rule!r}")
