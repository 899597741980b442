"""Closed-form length and area, equidistant area bounds and the improved
isoperimetric inequality L^2 >= 4 pi A + 8 pi |wigner area|."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .equidistants import WIGNER, EquidistantSupport, oriented_area, psi_functional
from .errors import BoundViolation, NotConstantWidth
from .support_fourier import FourierSupport, TrigSeries, blaschke_area, width

EPS_NUM = 1e-9
CONSTANT_WIDTH_TOL = 1e-12


def length_closed_form(support: TrigSeries) -> float:
    return 2.0 * math.pi * support.a0


def area_closed_form(support: TrigSeries) -> float:
    return blaschke_area(support)


@dataclass(frozen=True)
class CurveMetrics:
    length: float
    area: float
    psi: float
    wigner_area: float
    classic_deficit: float
    improved_deficit: float

    @property
    def eps(self) -> float:
        return EPS_NUM * self.length ** 2


def curve_metrics(support: FourierSupport) -> CurveMetrics:
    length = length_closed_form(support)
    area = area_closed_form(support)
    wigner = oriented_area(EquidistantSupport(support, WIGNER))
    classic = length ** 2 - 4 * math.pi * area
    return CurveMetrics(
        length=length,
        area=area,
        psi=psi_functional(support),
        wigner_area=wigner,
        classic_deficit=classic,
        improved_deficit=classic - 8 * math.pi * abs(wigner),
    )


class IsoperimetricCheck(NamedTuple):
    holds: bool
    margin: float
    equality: bool


def improved_isoperimetric_check(metrics: CurveMetrics) -> IsoperimetricCheck:
    margin = metrics.improved_deficit
    eps = metrics.eps
    return IsoperimetricCheck(margin >= -eps, margin, abs(margin) <= eps)


class Regime(str, Enum):
    INTERIOR = "interior"      # 0 < lam < 1, lam != 1/2
    WIGNER = "wigner"          # lam = 1/2, bounds on twice the caustic area
    EXTERIOR = "exterior"      # lam < 0 or lam > 1
    IDENTITY = "identity"      # lam in {0, 1}


class BoundsCheck(NamedTuple):
    lower: float
    value: float
    upper: float
    regime: Regime


def bounds_check(support: FourierSupport, lam: float) -> BoundsCheck:
    """Bounds on the oriented area of E_lam(M) for the regime that contains lam.

    At lam = 1/2 ``value`` is twice the caustic area, matching
    A - L^2/(4 pi) <= 2 * area <= 0.  Raises BoundViolation if the computed area
    falls outside by more than the roundoff allowance.
    """
    lam = float(lam)
    length = length_closed_form(support)
    area = area_closed_form(support)
    value = oriented_area(EquidistantSupport(support, lam))
    if lam in (0.0, 1.0):
        return BoundsCheck(area, value, area, Regime.IDENTITY)
    if lam == WIGNER:
        lower, upper, regime = area - length ** 2 / (4 * math.pi), 0.0, Regime.WIGNER
        value *= 2.0
    else:
        convex_side = area - lam * (1 - lam) * length ** 2 / math.pi
        symmetric_side = (2 * lam - 1) ** 2 * area
        if 0.0 < lam < 1.0:
            lower, upper, regime = convex_side, symmetric_side, Regime.INTERIOR
        else:
            lower, upper, regime = symmetric_side, convex_side, Regime.EXTERIOR
    eps = EPS_NUM * max(abs(lower), abs(upper), length ** 2 / (4 * math.pi))
    if not (lower - eps <= value <= upper + eps):
        raise BoundViolation(
            f"lambda={lam}: oriented area {value!r} outside [{lower!r}, {upper!r}]"
        )
    return BoundsCheck(lower, value, upper, regime)


def is_constant_width(support: TrigSeries, tol: float = CONSTANT_WIDTH_TOL) -> bool:
    even = support.even_part()
    return all(math.hypot(a, b) <= tol * support.a0 for _, a, b in even.terms)


class BarbierCheck(NamedTuple):
    width: float
    length: float
    residual: float


def barbier_check(support: FourierSupport, tol: float = CONSTANT_WIDTH_TOL) -> BarbierCheck:
    """Length against pi * width for a constant-width oval."""
    if not is_constant_width(support, tol):
        raise NotConstantWidth("Barbier's theorem needs a curve of constant width")
    w = width(support, 0.0)
    length = length_closed_form(support)
    return BarbierCheck(w, length, abs(length - math.pi * w))


def constant_width_area_identity(support: FourierSupport, tol: float = CONSTANT_WIDTH_TOL) -> float:
    """|A - (pi w^2 / 4 - 2 |wigner area|)|, which vanishes for constant width."""
    if not is_constant_width(support, tol):
        raise NotConstantWidth("the area identity needs a curve of constant width")
    w = width(support, 0.0)
    wigner = oriented_area(EquidistantSupport(support, WIGNER))
    return abs(area_closed_form(support) - (math.pi * w * w / 4 - 2 * abs(wigner)))
