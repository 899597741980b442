"""Planar ovals from Minkowski support functions: affine equidistants, the
Wigner caustic and the improved isoperimetric inequality."""

from .equidistants import (
    EquidistantReport,
    EquidistantSupport,
    cusp_parameters,
    equidistant_length,
    equidistant_point,
    equidistant_report,
    make_cusp_family,
    oriented_area,
    psi_functional,
)
from .errors import (
    BoundViolation,
    DegenerateRoot,
    NonConvexCurve,
    NotConstantWidth,
    OpenPolyline,
    OvalkitError,
    ParseError,
)
from .geometry import (
    PlanarPoint,
    Polyline,
    curve_point,
    integrate_periodic,
    polyline_length,
    polyline_signed_area,
    sample_curve,
)
from .inequalities import (
    CurveMetrics,
    area_closed_form,
    barbier_check,
    bounds_check,
    constant_width_area_identity,
    curve_metrics,
    improved_isoperimetric_check,
    is_constant_width,
    length_closed_form,
)
from .stability import (
    StabilityReport,
    d_infinity,
    d_two,
    odd_part_max_bound,
    phi,
    stability_check,
    wigner_type_curve,
)
from .support_fourier import (
    FourierSupport,
    PolarTangentialSample,
    TrigSeries,
    evaluate,
    load_curve_spec,
    parse_curve_spec,
    validate_convexity,
    width,
)

__version__ = "0.1.0"
