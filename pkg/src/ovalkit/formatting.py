"""Number presentation for reports: 15 significant digits plus a pi-multiple form."""

from __future__ import annotations

import math
from fractions import Fraction

SYMBOLIC_TOL = 1e-9
MAX_DENOMINATOR = 1000


def decimal(x: float) -> str:
    return f"{x:.15g}"


def _terminating(frac: Fraction) -> str | None:
    """Decimal form for improper fractions over a power of two (25.875, 1.5)."""
    d = frac.denominator
    if d & (d - 1) or frac < 1:
        return None
    text = f"{float(frac):.6f}".rstrip("0").rstrip(".")
    return text if Fraction(text) == frac else None


def _render(frac: Fraction, suffix: str) -> str:
    sign = "-" if frac < 0 else ""
    frac = abs(frac)
    if frac.denominator == 1:
        coeff = "" if frac.numerator == 1 else str(frac.numerator)
        return f"{sign}{coeff}{suffix}"
    dec = _terminating(frac)
    if dec is not None:
        return f"{sign}{dec}{suffix}"
    num = "" if frac.numerator == 1 else str(frac.numerator)
    return f"{sign}{num}{suffix}/{frac.denominator}"


def symbolic(x: float, scale: float | None = None) -> str | None:
    """``"117π"``, ``"25.875π²"``, ``"-2π/9"`` when x is within 1e-9 of such a value.

    ``scale`` is the natural size of the quantity; |x| below 1e-9 * scale reads as 0.
    """
    if x == 0.0 or (scale is not None and abs(x) <= SYMBOLIC_TOL * abs(scale)):
        return "0"
    for power, suffix in ((1, "π"), (2, "π²")):
        ratio = x / math.pi ** power
        frac = Fraction(ratio).limit_denominator(MAX_DENOMINATOR)
        if frac != 0 and abs(ratio - float(frac)) <= SYMBOLIC_TOL * abs(ratio):
            return _render(frac, suffix)
    return None


def quantity(x: float, scale: float | None = None) -> dict:
    return {"value": x, "symbolic": symbolic(x, scale)}


def text_line(name: str, x: float, scale: float | None = None, width: int = 24) -> str:
    sym = symbolic(x, scale)
    line = f"{name:<{width}}{decimal(x)}"
    return f"{line}  = {sym}" if sym is not None else line
