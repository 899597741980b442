"""Minkowski support functions stored as truncated Fourier series.

A support function is

    p(theta) = a0 + sum_n (a_n cos(n theta) + b_n sin(n theta))

and everything in the package is derived from its coefficients.  ``TrigSeries``
is the unvalidated algebra (used for differences, equidistant supports and
curvature conditions); ``FourierSupport`` adds the oval invariants and is
checked for convexity when it is built.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any, Iterable

import numpy as np

from .errors import NonConvexCurve, ParseError

TWO_PI = 2.0 * math.pi

Term = tuple[int, float, float]

# grid points per unit of the highest harmonic when hunting extrema
GRID_SAFETY = 8
MIN_GRID = 1024
NEAR_SINGULAR = 1e-9


def canonical_angle(theta):
    """Reduce angles to [0, 2pi)."""
    reduced = np.mod(theta, TWO_PI)
    if np.ndim(reduced) == 0:
        return float(reduced)
    return reduced


def _normalize_terms(terms: Iterable) -> tuple[Term, ...]:
    seen = set()
    out = []
    for term in terms:
        n, a, b = term
        if isinstance(n, bool) or int(n) != n:
            raise ValueError(f"harmonic index must be an integer, got {n!r}")
        n = int(n)
        if n < 1:
            raise ValueError(f"harmonic index must be >= 1, got {n}")
        if n in seen:
            raise ValueError(f"harmonic index {n} appears twice")
        seen.add(n)
        a, b = float(a), float(b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise ValueError(f"non-finite coefficient for harmonic {n}")
        if a == 0.0 and b == 0.0:
            continue
        out.append((n, a, b))
    out.sort()
    return tuple(out)


@dataclass(frozen=True)
class TrigSeries:
    """A real trigonometric polynomial with exact term-wise calculus."""

    a0: float
    terms: tuple[Term, ...] = ()

    def __post_init__(self):
        a0 = float(self.a0)
        if not math.isfinite(a0):
            raise ValueError("a0 must be finite")
        object.__setattr__(self, "a0", a0)
        object.__setattr__(self, "terms", _normalize_terms(self.terms))

    @classmethod
    def _trusted(cls, a0: float, terms: Iterable[Term]) -> TrigSeries:
        """Build from terms derived from an already validated series.

        Keeps the sorted, duplicate-free order; only zero terms are dropped.
        """
        obj = object.__new__(cls)
        object.__setattr__(obj, "a0", float(a0))
        object.__setattr__(obj, "terms", tuple(t for t in terms if t[1] != 0.0 or t[2] != 0.0))
        return obj

    @cached_property
    def _arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        if not self.terms:
            empty = np.zeros(0)
            return empty.astype(int), empty, empty
        n, a, b = zip(*self.terms)
        return np.array(n, dtype=int), np.array(a), np.array(b)

    @property
    def max_harmonic(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    def coefficient(self, n: int) -> tuple[float, float]:
        for k, a, b in self.terms:
            if k == n:
                return a, b
        return 0.0, 0.0

    def values(self, theta, orders: Iterable[int] = (0,)) -> list:
        """Evaluate several derivatives at once, sharing the trig tables."""
        t = np.asarray(canonical_angle(theta), dtype=float)
        n, a, b = self._arrays
        nt = np.multiply.outer(t, n)
        c, s = np.cos(nt), np.sin(nt)
        out = []
        for k in orders:
            scale = n.astype(float) ** k
            # d^k/dtheta^k rotates (cos, sin) by a quarter turn per order
            phase = k % 4
            if phase == 0:
                v = c @ (a * scale) + s @ (b * scale)
            elif phase == 1:
                v = -(s @ (a * scale)) + c @ (b * scale)
            elif phase == 2:
                v = -(c @ (a * scale)) - s @ (b * scale)
            else:
                v = s @ (a * scale) - c @ (b * scale)
            if k == 0:
                v = v + self.a0
            out.append(float(v) if v.ndim == 0 else v)
        return out

    def __call__(self, theta):
        return self.values(theta, (0,))[0]

    def derivative(self, order: int = 1) -> TrigSeries:
        terms = self.terms
        for _ in range(order):
            terms = tuple((n, n * b, -n * a) for n, a, b in terms)
        return TrigSeries._trusted(0.0 if order else self.a0, terms)

    def radius_series(self) -> TrigSeries:
        """p + p'' as a series: harmonic n is multiplied by 1 - n^2."""
        return TrigSeries._trusted(
            self.a0, ((n, (1 - n * n) * a, (1 - n * n) * b) for n, a, b in self.terms)
        )

    def shifted_half_turn(self) -> TrigSeries:
        """theta -> p(theta + pi), exactly: odd harmonics flip sign."""
        return TrigSeries._trusted(
            self.a0, ((n, (-1) ** n * a, (-1) ** n * b) for n, a, b in self.terms)
        )

    def odd_part(self) -> TrigSeries:
        return TrigSeries._trusted(0.0, (t for t in self.terms if t[0] % 2 == 1))

    def even_part(self) -> TrigSeries:
        """Even harmonics n >= 2 only; the constant term is excluded."""
        return TrigSeries._trusted(0.0, (t for t in self.terms if t[0] % 2 == 0))

    def as_series(self) -> TrigSeries:
        return TrigSeries._trusted(self.a0, self.terms)

    def __add__(self, other: TrigSeries) -> TrigSeries:
        coeffs: dict[int, list[float]] = {}
        for series in (self, other):
            for n, a, b in series.terms:
                acc = coeffs.setdefault(n, [0.0, 0.0])
                acc[0] += a
                acc[1] += b
        return TrigSeries._trusted(self.a0 + other.a0, ((n, a, b) for n, (a, b) in sorted(coeffs.items())))

    def __mul__(self, factor: float) -> TrigSeries:
        f = float(factor)
        if not math.isfinite(f):
            raise ValueError("factor must be finite")
        return TrigSeries._trusted(f * self.a0, ((n, f * a, f * b) for n, a, b in self.terms))

    __rmul__ = __mul__

    def __neg__(self) -> TrigSeries:
        return self * -1.0

    def __sub__(self, other: TrigSeries) -> TrigSeries:
        return self + (-other)

    def is_zero(self, tol: float = 0.0) -> bool:
        if abs(self.a0) > tol:
            return False
        return all(math.hypot(a, b) <= tol for _, a, b in self.terms)


def blaschke_area(series: TrigSeries) -> float:
    """(1/2) * integral of (q^2 - q'^2) over [0, 2pi], from the coefficients.

    For a support function this is the enclosed area; for any other series it
    is the oriented area of the curve (q cos - q' sin, q sin + q' cos).
    """
    tail = sum((n * n - 1) * (a * a + b * b) for n, a, b in series.terms)
    return math.pi * series.a0 ** 2 - 0.5 * math.pi * tail


def default_grid_size(series: TrigSeries) -> int:
    return max(MIN_GRID, 4 * GRID_SAFETY * series.max_harmonic)


def grid_values(series: TrigSeries, m: int) -> np.ndarray:
    """series(2 pi j / m) for j = 0..m-1, by one inverse real FFT."""
    n, a, b = series._arrays
    if n.size and n[-1] >= m / 2:
        raise ValueError(f"grid of {m} points cannot resolve harmonic {int(n[-1])}")
    spec = np.zeros(m // 2 + 1, dtype=complex)
    spec[0] = m * series.a0
    spec[n] = 0.5 * m * (a - 1j * b)
    return np.fft.irfft(spec, m)


def _polish(series: TrigSeries, sense: float, grid: np.ndarray, signed: np.ndarray,
            h: float, candidates: int) -> tuple[float, float]:
    prev = np.concatenate((signed[-1:], signed[:-1]))
    nxt = np.concatenate((signed[1:], signed[:1]))
    idx = np.flatnonzero((signed <= prev) & (signed <= nxt))
    if idx.size == 0:
        idx = np.array([int(np.argmin(signed))])
    idx = idx[np.argsort(signed[idx], kind="stable")[:candidates]]

    d1 = series.derivative()
    t0 = grid[idx]
    t = t0.copy()
    for _ in range(16):
        g, c = d1.values(t, (0, 1))
        ok = sense * c > 0
        step = np.where(ok, g / np.where(ok, c, 1.0), 0.0)
        t = np.clip(t - step, t0 - h, t0 + h)
        # quadratic convergence: the next correction would be ~1e-22
        if np.all(np.abs(step) <= 1e-11):
            break
    polished = sense * series(t)
    best_poly = int(np.argmin(polished))
    best_grid = int(idx[0])
    if polished[best_poly] <= signed[best_grid]:
        return float(canonical_angle(t[best_poly])), float(sense * polished[best_poly])
    return float(grid[best_grid]), float(sense * signed[best_grid])


def series_extremum(series: TrigSeries, kind: str = "min", grid_size: int | None = None,
                    candidates: int = 3) -> tuple[float, float]:
    """Global min or max of a trigonometric polynomial on [0, 2pi).

    Uniform scan, then Newton polishing of the best ``candidates`` grid optima
    on the exact derivative, clamped to the bracketing grid cells.
    Returns ``(theta, value)``.
    """
    if kind not in ("min", "max"):
        raise ValueError("kind must be 'min' or 'max'")
    if not series.terms:
        return 0.0, series.a0
    sense = 1.0 if kind == "min" else -1.0
    m = grid_size or default_grid_size(series)
    h = TWO_PI / m
    vals = grid_values(series, m)
    return _polish(series, sense, np.arange(m) * h, sense * vals, h, candidates)


def sup_norm(series: TrigSeries, grid_size: int | None = None) -> float:
    """max over theta of |series(theta)|."""
    if not series.terms:
        return abs(series.a0)
    m = grid_size or default_grid_size(series)
    h = TWO_PI / m
    grid = np.arange(m) * h
    vals = grid_values(series, m)
    _, hi = _polish(series, -1.0, grid, -vals, h, 3)
    _, lo = _polish(series, 1.0, grid, vals, h, 3)
    return max(abs(hi), abs(lo))


def validate_convexity(support: TrigSeries, grid_size: int | None = None,
                       tolerance: float = 0.0) -> float:
    """Minimum of the radius of curvature rho = p + p'' over a dense grid.

    Raises NonConvexCurve when the minimum is <= ``tolerance``.
    """
    required = 4 * GRID_SAFETY * support.max_harmonic
    if grid_size is not None and grid_size < required:
        raise ValueError(f"grid_size must be >= {required} for harmonic {support.max_harmonic}")
    theta, min_rho = series_extremum(support.radius_series(), "min", grid_size)
    if min_rho <= tolerance:
        raise NonConvexCurve(theta, min_rho)
    if support.a0 > 0 and min_rho < NEAR_SINGULAR * support.a0:
        warnings.warn(
            f"nearly singular oval: min rho = {min_rho:.3g} at theta = {theta:.6g}",
            RuntimeWarning,
            stacklevel=2,
        )
    return min_rho


@dataclass(frozen=True)
class FourierSupport(TrigSeries):
    """Support function of an oval. Construction certifies convexity."""

    min_rho: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        super().__post_init__()
        if self.a0 <= 0:
            raise ValueError(f"a0 must be positive, got {self.a0}")
        object.__setattr__(self, "min_rho", validate_convexity(self))

    @classmethod
    def from_series(cls, series: TrigSeries) -> FourierSupport:
        return cls(series.a0, series.terms)


@dataclass(frozen=True)
class PolarTangentialSample:
    theta: float
    p: float
    dp: float
    ddp: float
    rho: float


def evaluate(support: TrigSeries, theta: float) -> PolarTangentialSample:
    t = canonical_angle(theta)
    p, dp, ddp = support.values(t, (0, 1, 2))
    return PolarTangentialSample(t, p, dp, ddp, p + ddp)


def width(support: TrigSeries, theta):
    """Distance between the two tangent lines with normals theta and theta + pi."""
    theta = np.asarray(theta, dtype=float)
    w = support(theta) + support(theta + math.pi)
    return float(w) if np.ndim(w) == 0 else w


# -- curve-spec JSON ---------------------------------------------------------

def parse_curve_spec(obj: Any) -> FourierSupport:
    """Build a support from ``{"a0": ..., "terms": [{"n", "a", "b"}, ...]}``.

    Malformed documents raise ParseError; valid documents describing a
    non-convex curve raise NonConvexCurve.
    """
    if not isinstance(obj, dict):
        raise ParseError("curve spec must be a JSON object")
    if "a0" not in obj:
        raise ParseError("curve spec is missing 'a0'")
    a0 = obj["a0"]
    if isinstance(a0, bool) or not isinstance(a0, (int, float)):
        raise ParseError("'a0' must be a number")
    raw_terms = obj.get("terms", [])
    if not isinstance(raw_terms, list):
        raise ParseError("'terms' must be a list")
    terms = []
    for i, t in enumerate(raw_terms):
        if not isinstance(t, dict) or "n" not in t:
            raise ParseError(f"term {i} must be an object with at least 'n'")
        n, a, b = t["n"], t.get("a", 0.0), t.get("b", 0.0)
        if isinstance(n, bool) or not isinstance(n, int):
            raise ParseError(f"term {i}: 'n' must be an integer")
        for name, v in (("a", a), ("b", b)):
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise ParseError(f"term {i}: '{name}' must be a number")
        terms.append((n, a, b))
    try:
        return FourierSupport(a0, tuple(terms))
    except NonConvexCurve:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def loads_curve_spec(text: str) -> FourierSupport:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return parse_curve_spec(obj)


def load_curve_spec(path: str | Path) -> FourierSupport:
    return loads_curve_spec(Path(path).read_text())


def curve_spec(support: TrigSeries) -> dict:
    return {
        "a0": support.a0,
        "terms": [{"n": n, "a": a, "b": b} for n, a, b in support.terms],
    }
