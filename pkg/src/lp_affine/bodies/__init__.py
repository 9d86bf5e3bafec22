"""
Convex bodies: representations, evaluation and polarity
"""
from .convex import (
    Direction,
    BoundaryPoint,
    LinearMap,
    ConvexBody,
    Ellipsoid,
    PlanarSupport,
    Arc,
    PiecewiseArc,
    PlanarPolar,
    HalfspacePolytope,
    Cube,
    CrossPolytope,
    CurvatureDualityResult,
    support,
    boundary_point,
    curvature_function,
    gauss_curvature_at,
    radial,
    polar_support,
    polar_body,
    volume,
    cauchy_volume,
    linear_image,
    centroid,
    recenter,
    curvature_duality_check,
    unit_ball,
    make_disc_support,
    make_rounded_intersection,
    polygon_vertices,
)
from .loader import body_from_spec, load_body
from .polygon import (
    clip_halfplane,
    intersect_halfplanes,
    polygon_area,
    polygon_centroid,
    polar_polygon,
)

__all__ = [
    # Types
    "Direction",
    "BoundaryPoint",
    "LinearMap",
    "ConvexBody",
    "Ellipsoid",
    "PlanarSupport",
    "Arc",
    "PiecewiseArc",
    "PlanarPolar",
    "HalfspacePolytope",
    "Cube",
    "CrossPolytope",
    "CurvatureDualityResult",
    # Evaluation
    "support",
    "boundary_point",
    "curvature_function",
    "gauss_curvature_at",
    "radial",
    "polar_support",
    "polar_body",
    "volume",
    "cauchy_volume",
    "linear_image",
    "centroid",
    "recenter",
    "curvature_duality_check",
    # Constructors and spec files
    "unit_ball",
    "make_disc_support",
    "make_rounded_intersection",
    "polygon_vertices",
    "body_from_spec",
    "load_body",
    # Polygons
    "clip_halfplane",
    "intersect_halfplanes",
    "polygon_area",
    "polygon_centroid",
    "polar_polygon",
]
