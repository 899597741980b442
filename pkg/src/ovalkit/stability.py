"""Stability of the improved isoperimetric inequality.

The deficit Phi = L^2 - 4 pi A - 8 pi |wigner area| measures how far an oval is
from constant width.  It is compared with the distance from the oval to its
Wigner-caustic-type curve W_M, the constant-width oval with the same length and
the same caustic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple

from .errors import BoundViolation
from .inequalities import CONSTANT_WIDTH_TOL, EPS_NUM, length_closed_form
from .support_fourier import FourierSupport, TrigSeries, sup_norm

HAUSDORFF_GRID = 8192


def wigner_type_curve(support: FourierSupport) -> FourierSupport:
    """L/(2 pi) + (p(theta) - p(theta + pi)) / 2: drop every even harmonic."""
    # L / (2 pi) is a0 exactly; reuse it rather than round-tripping through L
    return FourierSupport(support.a0, support.odd_part().terms)


def d_infinity(a: TrigSeries, b: TrigSeries) -> float:
    """Hausdorff distance: max |p_a - p_b|."""
    return sup_norm(a - b, max(HAUSDORFF_GRID, 64 * max(a.max_harmonic, b.max_harmonic)))


def d_two(a: TrigSeries, b: TrigSeries) -> float:
    """L2 distance of the support functions, by Parseval on the coefficient difference."""
    diff = a - b
    sq = 2 * math.pi * diff.a0 ** 2 + math.pi * sum(x * x + y * y for _, x, y in diff.terms)
    return math.sqrt(sq)


def phi(support: TrigSeries) -> float:
    """Improved isoperimetric deficit from the even harmonics alone."""
    return 2 * math.pi ** 2 * sum(
        (n * n - 1) * (a * a + b * b) for n, a, b in support.even_part().terms
    )


class EqualityClass(str, Enum):
    CONSTANT_WIDTH = "constant_width"
    L2_EQUALITY_FAMILY = "l2_equality_family"
    STRICT = "strict"


@dataclass(frozen=True)
class StabilityReport:
    phi: float
    d_inf: float
    d_2: float
    margin_max: float
    margin_l2: float
    equality_class: EqualityClass


def classify(support: TrigSeries, tol: float = CONSTANT_WIDTH_TOL) -> EqualityClass:
    present = [n for n, a, b in support.even_part().terms if math.hypot(a, b) > tol * support.a0]
    if not present:
        return EqualityClass.CONSTANT_WIDTH
    if present == [2]:
        return EqualityClass.L2_EQUALITY_FAMILY
    return EqualityClass.STRICT


def stability_check(support: FourierSupport, tol: float = CONSTANT_WIDTH_TOL) -> StabilityReport:
    w = wigner_type_curve(support)
    deficit = phi(support)
    dinf = d_infinity(support, w)
    d2 = d_two(support, w)
    # Phi - 6 pi d2^2 summed per harmonic avoids cancellation; exactly 0 for n = 2
    margin_l2 = 2 * math.pi ** 2 * sum(
        (n * n - 4) * (a * a + b * b) for n, a, b in support.even_part().terms
    )
    report = StabilityReport(
        phi=deficit,
        d_inf=dinf,
        d_2=d2,
        margin_max=deficit - 4 * math.pi ** 2 * dinf ** 2,
        margin_l2=margin_l2,
        equality_class=classify(support, tol),
    )
    eps = EPS_NUM * length_closed_form(support) ** 2
    if report.margin_max < -eps or report.margin_l2 < -eps:
        raise BoundViolation(f"negative stability margin: {report}")
    return report


class OddPartBound(NamedTuple):
    max_odd: float
    max_full: float


def odd_part_max_bound(coefficients: Iterable[tuple[int, float, float]]) -> OddPartBound:
    """Sup norm of the odd-harmonic part against the sup norm of the whole sum."""
    full = TrigSeries(0.0, tuple(coefficients))
    grid = max(HAUSDORFF_GRID, 64 * full.max_harmonic)
    max_full = sup_norm(full, grid)
    max_odd = sup_norm(full.odd_part(), grid)
    if max_odd > max_full + 1e-10 * max(1.0, max_full):
        raise BoundViolation(f"odd part {max_odd!r} exceeds full sum {max_full!r}")
    return OddPartBound(max_odd, max_full)
