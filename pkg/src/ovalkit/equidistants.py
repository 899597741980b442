"""Affine lambda-equidistants of an oval and the Wigner caustic (lambda = 1/2).

The equidistant E_lam(M) is traced by lam * gamma(theta) + (1 - lam) * gamma(theta + pi).
Its support-like function is P_lam(theta) = lam p(theta) - (1 - lam) p(theta + pi),
so every quantity here reduces to coefficient arithmetic on P_lam.

For lam = 1/2 the parameterization over [0, 2pi] runs around the caustic twice.
That factor of two is applied in this module and nowhere else: areas and
lengths returned for the caustic are for a single traversal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.optimize import bisect

from .errors import DegenerateRoot
from .geometry import (
    PlanarPoint,
    Polyline,
    integrate_periodic,
    sample_thetas,
    support_curve_xy,
)
from .support_fourier import (
    TWO_PI,
    FourierSupport,
    TrigSeries,
    blaschke_area,
)

WIGNER = 0.5
MIN_CUSP_INTERVALS = 4096
MIN_LENGTH_COUNT = 4096
ROOT_TOL = 1e-12


@dataclass(frozen=True)
class EquidistantSupport:
    base: FourierSupport
    lam: float

    @property
    def is_wigner(self) -> bool:
        return self.lam == WIGNER

    @cached_property
    def series(self) -> TrigSeries:
        """P_lam as a trigonometric series."""
        lam = float(self.lam)
        return lam * self.base.as_series() - (1.0 - lam) * self.base.shifted_half_turn()

    @cached_property
    def cusp_condition(self) -> TrigSeries:
        """lam rho(theta) - (1 - lam) rho(theta + pi); the speed of gamma_lam up to sign."""
        return self.series.radius_series()


def equidistant_xy(eq: EquidistantSupport, theta) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    lam = float(eq.lam)
    return lam * support_curve_xy(eq.base, theta) + (1.0 - lam) * support_curve_xy(
        eq.base, theta + math.pi
    )


def equidistant_point(eq: EquidistantSupport, theta: float) -> PlanarPoint:
    x, y = equidistant_xy(eq, theta)
    return PlanarPoint(float(x), float(y))


def sample_equidistant(eq: EquidistantSupport, count: int, single_cover: bool = False) -> Polyline:
    """Closed polyline through gamma_lam at ``count`` uniform angles.

    With ``single_cover`` the Wigner caustic is sampled over [0, pi) only, which
    traverses it exactly once.
    """
    span = math.pi if (single_cover and eq.is_wigner) else TWO_PI
    return Polyline(equidistant_xy(eq, sample_thetas(count, span)), closed=True)


def psi_functional(support: TrigSeries) -> float:
    """Cross term between p and its half-turn, from the Fourier coefficients."""
    tail = sum((-1) ** n * (n * n - 1) * (a * a + b * b) for n, a, b in support.terms if n >= 2)
    return math.pi * support.a0 ** 2 - 0.5 * math.pi * tail


def psi_integral(support: TrigSeries, count: int | None = None) -> float:
    """Same functional by trapezoid quadrature of (p p(+pi) - p' p'(+pi)) / 2."""
    count = count or max(64, 4 * support.max_harmonic + 4)
    count += count % 2

    def integrand(t):
        p, dp = support.values(t, (0, 1))
        q, dq = support.values(t + math.pi, (0, 1))
        return 0.5 * (p * q - dp * dq)

    return integrate_periodic(integrand, count, rule="trapezoid")


def _centrally_symmetric(support: TrigSeries) -> bool:
    return all(n == 1 for n, _, _ in support.odd_part().terms)


def oriented_area(eq: EquidistantSupport) -> float:
    """Oriented area of E_lam(M), single traversal."""
    lam = float(eq.lam)
    area = blaschke_area(eq.base)
    if lam in (0.0, 1.0):
        return area
    if eq.is_wigner and _centrally_symmetric(eq.base):
        return 0.0
    value = (2 * lam * lam - 2 * lam + 1) * area - 2 * lam * (1 - lam) * psi_functional(eq.base)
    return 0.5 * value if eq.is_wigner else value


def cusp_parameters(eq: EquidistantSupport, intervals: int | None = None) -> list[float]:
    """Angles where gamma_lam is singular (sign changes of the cusp condition).

    Angles lie in [0, 2pi), or in [0, pi) for the Wigner caustic where theta and
    theta + pi give the same point.
    """
    g = eq.cusp_condition
    if g.is_zero(ROOT_TOL * eq.base.a0):
        raise DegenerateRoot(f"cusp condition vanishes identically at lambda={eq.lam}")
    m = intervals or max(MIN_CUSP_INTERVALS, 64 * g.max_harmonic)
    span = math.pi if eq.is_wigner else TWO_PI
    grid = np.linspace(0.0, span, m + 1)
    vals = g(grid)
    roots = []
    exact = np.flatnonzero(vals[:-1] == 0.0)
    roots.extend(float(grid[k]) for k in exact)
    crossing = np.flatnonzero(vals[:-1] * vals[1:] < 0.0)
    for k in crossing:
        roots.append(bisect(g, grid[k], grid[k + 1], xtol=1e-15, maxiter=200))
    return sorted(roots)


def equidistant_length(eq: EquidistantSupport, count: int | None = None) -> float:
    """Length of E_lam(M): Simpson quadrature of the speed |P_lam + P_lam''|."""
    g = eq.cusp_condition
    if count is None:
        count = max(MIN_LENGTH_COUNT, 64 * g.max_harmonic)
    total = integrate_periodic(lambda t: np.abs(g(t)), count, rule="simpson")
    return 0.5 * total if eq.is_wigner else total


def make_cusp_family(n: int) -> FourierSupport:
    """Constant-width oval cos((2n+1) theta) + (2n+1)^2 + 2; its caustic has 2n+1 cusps."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k = 2 * n + 1
    return FourierSupport(k * k + 2, ((k, 1.0, 0.0),))


def predicted_cusp_angles(n: int) -> list[float]:
    return [(math.pi + 2 * k * math.pi) / (4 * n + 2) for k in range(2 * n + 1)]


@dataclass(frozen=True)
class EquidistantReport:
    lam: float
    oriented_area: float
    length_estimate: float
    cusp_thetas: tuple[float, ...]
    is_wigner: bool
    degenerate: bool = False


def equidistant_report(support: FourierSupport, lam: float, count: int | None = None) -> EquidistantReport:
    eq = EquidistantSupport(support, lam)
    try:
        cusps = tuple(cusp_parameters(eq))
        degenerate = False
    except DegenerateRoot:
        cusps, degenerate = (), True
    return EquidistantReport(
        lam=float(lam),
        oriented_area=oriented_area(eq),
        length_estimate=equidistant_length(eq, count),
        cusp_thetas=cusps,
        is_wigner=eq.is_wigner,
        degenerate=degenerate,
    )
