"""Exception types raised across ovalkit."""

from __future__ import annotations


class OvalkitError(Exception):
    """Base class for every error raised by this package."""


class ParseError(OvalkitError, ValueError):
    """A curve-spec document is malformed."""


class NonConvexCurve(OvalkitError, ValueError):
    """The radius of curvature is not positive somewhere on the curve."""

    def __init__(self, theta: float, min_rho: float):
        self.theta = theta
        self.min_rho = min_rho
        super().__init__(
            f"support function is not an oval: rho({theta:.12g}) = {min_rho:.6g} <= 0"
        )


class OpenPolyline(OvalkitError, ValueError):
    pass


class DegenerateRoot(OvalkitError, ValueError):
    """The cusp condition vanishes identically, so there are no isolated cusps."""


class BoundViolation(OvalkitError, ArithmeticError):
    """A proven inequality failed numerically. Always an implementation bug."""


class NotConstantWidth(OvalkitError, ValueError):
    pass
