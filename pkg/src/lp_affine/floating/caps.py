"""
Floating bodies and surface bodies in the plane

A cap in direction u with drop Delta is K ∩ {<x, u> >= h_K(u) - Delta}.
Floating bodies cut caps of fixed area delta, surface bodies caps whose
boundary carries fixed f-weighted length s. Both are intersections of the
complementary halfplanes over Ndirs uniform directions.

Smooth bodies measure caps along the support parametrisation:
with chord endpoints x(theta_1), x(theta_2),

    area   = 1/2 int_{theta_1}^{theta_2} f(theta) (h(theta) - <x(theta_1), e(theta)>) dtheta
    length = int_{theta_1}^{theta_2} F(e(theta)) f(theta) dtheta

Polygons are measured exactly by clipping every edge against the chord.
"""
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import special

from ..bodies.convex import (
    ConvexBody,
    PiecewiseArc,
    _unit,
    _unit_rows,
    polar_body,
    polygon_vertices,
    volume,
)
from ..bodies.polygon import (
    edge_normals,
    intersect_halfplanes,
    polar_polygon,
    polygon_area,
)
from ..exceptions import (
    DegenerateBodyError,
    PreconditionError,
    UnsupportedKindError,
)
from ..quadrature import grid_circle, integrate
from ..utils.numerics import bisect_decreasing, bisect_increasing

MIN_DIRECTIONS = 64
ANGLE_ITERATIONS = 60
FACE_TOL = 1e-12
DEGENERATE_TOL = 1e-12

Weight = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class CapCut:
    """One cut: halfspace {<x, u> >= h_K(u) - offset_drop} carrying ``measure``."""
    direction: np.ndarray
    offset_drop: float
    measure: float


@dataclass(frozen=True, eq=False)
class InnerBodyApprox:
    """
    Polygon approximation of K_delta or K_{f,s}.

    Attributes
    ----------
    normals, offsets : numpy.ndarray
        The halfplanes <x, normals[i]> <= offsets[i]
    vertices : numpy.ndarray
        Counter-clockwise vertices of their intersection
    parameter : float
        delta (floating) or s (surface)
    direction_count : int
        Number of cut directions
    construction : str
        'floating' or 'surface'
    """
    normals: np.ndarray
    offsets: np.ndarray
    vertices: np.ndarray
    parameter: float
    direction_count: int
    construction: str

    @property
    def halfspaces(self):
        return list(zip(self.normals, self.offsets))

    @property
    def area(self) -> float:
        return polygon_area(self.vertices)


def constant_weight(c: float = 1.0) -> Weight:
    """Boundary weight f = c."""
    if c <= 0.0:
        raise PreconditionError(f"Constant weight must be positive (got {c})")

    def weight(U: np.ndarray) -> np.ndarray:
        return np.full(len(U), float(c))

    return weight


def _check_planar(body: ConvexBody):
    if body.dimension != 2:
        raise UnsupportedKindError("Floating and surface bodies are built in the plane only")
    if isinstance(body, PiecewiseArc):
        raise UnsupportedKindError(
            "Cap measures need a continuous curvature function; arc bodies are not supported"
        )
    if not (body.smooth or body.polytope):
        raise UnsupportedKindError(f"No cap measure for {body.describe()}")


# ---------------------------------------------------------------------------
# Smooth bodies
# ---------------------------------------------------------------------------

def _eval(body: ConvexBody, method: str, theta: np.ndarray) -> np.ndarray:
    values = getattr(body, method)(_unit(theta.ravel()))
    return values.reshape(theta.shape + values.shape[1:])


def _bandwidth(body: ConvexBody) -> int:
    return int(getattr(body, "harmonics", 8))


def _chord_angles(body: ConvexBody, phi: np.ndarray, level: np.ndarray):
    """Normal angles of the chord endpoints on either side of phi."""
    u = _unit(phi)

    def along_u(theta):
        return np.einsum("ij,ij->i", _eval(body, "boundary_positions", theta), u)

    theta1 = bisect_increasing(along_u, phi - np.pi, phi, level, iterations=ANGLE_ITERATIONS)
    theta2 = bisect_decreasing(along_u, phi, phi + np.pi, level, iterations=ANGLE_ITERATIONS)
    return theta1, theta2


def _gauss_nodes(body: ConvexBody, span: np.ndarray):
    m = 48 + int(np.ceil(2.0 * _bandwidth(body) * float(np.max(span)) / np.pi))
    return special.roots_legendre(m)


def _smooth_cap_area(body: ConvexBody, phi: np.ndarray, drop: np.ndarray) -> np.ndarray:
    level = body.support_values(_unit(phi)) - drop
    theta1, theta2 = _chord_angles(body, phi, level)
    start = _eval(body, "boundary_positions", theta1)
    half = 0.5 * (theta2 - theta1)
    x, w = _gauss_nodes(body, theta2 - theta1)
    theta = 0.5 * (theta1 + theta2)[:, None] + half[:, None] * x[None, :]
    e = np.stack([np.cos(theta), np.sin(theta)], axis=-1)
    height = _eval(body, "support_values", theta) - np.einsum("dk,dmk->dm", start, e)
    integrand = _eval(body, "curvature_values", theta) * height
    return 0.5 * half * (integrand @ w)


def _smooth_cap_length(body: ConvexBody, weight: Weight, phi: np.ndarray,
                       drop: np.ndarray) -> np.ndarray:
    level = body.support_values(_unit(phi)) - drop
    theta1, theta2 = _chord_angles(body, phi, level)
    half = 0.5 * (theta2 - theta1)
    x, w = _gauss_nodes(body, theta2 - theta1)
    theta = 0.5 * (theta1 + theta2)[:, None] + half[:, None] * x[None, :]
    density = _eval(body, "curvature_values", theta) * weight(_unit(theta.ravel())).reshape(theta.shape)
    return half * (density @ w)


# ---------------------------------------------------------------------------
# Polygons
# ---------------------------------------------------------------------------

def _clipped_edges(vertices: np.ndarray, U: np.ndarray, level: np.ndarray):
    """
    Parts of every polygon edge inside the caps {<x, u_d> >= level_d}.

    Returns start and end points (D, V, 2), the validity mask (D, V) and the
    chord exit/entry points (D, 2).
    """
    a = vertices[None, :, :]
    b = np.roll(vertices, -1, axis=0)[None, :, :]
    sa = U @ vertices.T - level[:, None]
    sb = np.roll(sa, -1, axis=1)
    inside_a, inside_b = sa >= 0.0, sb >= 0.0
    crossing = inside_a != inside_b
    with np.errstate(divide="ignore", invalid="ignore"):
        t_cross = np.where(crossing, sa / np.where(crossing, sa - sb, 1.0), 0.0)
    t0 = np.where(inside_a, 0.0, t_cross)
    t1 = np.where(inside_b, 1.0, t_cross)
    valid = inside_a | inside_b
    p = a + t0[..., None] * (b - a)
    q = a + t1[..., None] * (b - a)
    leaving = (inside_a & ~inside_b)[..., None]
    entering = (~inside_a & inside_b)[..., None]
    exit_point = np.sum(np.where(leaving, q, 0.0), axis=1)
    entry_point = np.sum(np.where(entering, p, 0.0), axis=1)
    return p, q, valid, exit_point, entry_point


def _polygon_cap_area(vertices: np.ndarray, U: np.ndarray, level: np.ndarray) -> np.ndarray:
    p, q, valid, exit_point, entry_point = _clipped_edges(vertices, U, level)
    cross = p[..., 0] * q[..., 1] - p[..., 1] * q[..., 0]
    chord = exit_point[:, 0] * entry_point[:, 1] - exit_point[:, 1] * entry_point[:, 0]
    return 0.5 * (np.sum(np.where(valid, cross, 0.0), axis=1) + chord)


def _polygon_cap_length(vertices: np.ndarray, weight: Weight, U: np.ndarray,
                        level: np.ndarray) -> np.ndarray:
    # the exposed face F(K, u) carries no cap measure
    p, q, valid, _, _ = _clipped_edges(vertices, U, level)
    normals, _ = edge_normals(vertices)
    exposed = (U @ normals.T) > 1.0 - FACE_TOL
    lengths = np.linalg.norm(q - p, axis=-1) * weight(normals)[None, :]
    return np.sum(np.where(valid & ~exposed, lengths, 0.0), axis=1)


# ---------------------------------------------------------------------------
# Offsets
# ---------------------------------------------------------------------------

def _widths(body: ConvexBody, U: np.ndarray) -> np.ndarray:
    return body.support_values(U) + body.support_values(-U)


def _solve_drops(body: ConvexBody, U: np.ndarray, measure_fn, target: float) -> np.ndarray:
    """Bisect the drop Delta in [0, width(u)] until the cap measure hits target."""
    widths = _widths(body, U)
    return bisect_increasing(measure_fn, np.zeros(len(U)), widths, np.full(len(U), target))


def _area_fn(body: ConvexBody, U: np.ndarray):
    h = body.support_values(U)
    if body.polytope:
        vertices = polygon_vertices(body)
        return lambda drop: _polygon_cap_area(vertices, U, h - drop)
    phi = np.arctan2(U[:, 1], U[:, 0])
    return lambda drop: _smooth_cap_area(body, phi, drop)


def _length_fn(body: ConvexBody, weight: Weight, U: np.ndarray):
    h = body.support_values(U)
    if body.polytope:
        vertices = polygon_vertices(body)
        return lambda drop: _polygon_cap_length(vertices, weight, U, h - drop)
    phi = np.arctan2(U[:, 1], U[:, 0])
    return lambda drop: _smooth_cap_length(body, weight, phi, drop)


def _check_delta(body: ConvexBody, delta: float):
    area = volume(body)
    if not 0.0 < delta <= 0.5 * area:
        raise PreconditionError(f"delta = {delta} outside (0, |K|/2] = (0, {0.5 * area}]")


def total_weighted_length(body: ConvexBody, weight: Weight) -> float:
    """int_{dK} f dmu_K, after checking that f is bounded below by a positive constant."""
    _check_planar(body)
    if body.polytope:
        vertices = polygon_vertices(body)
        normals, _ = edge_normals(vertices)
        values = weight(normals)
        edges = np.linalg.norm(np.roll(vertices, -1, axis=0) - vertices, axis=1)
        total = float(np.sum(values * edges))
    else:
        grid = grid_circle(4096)
        values = weight(grid.nodes)
        total = integrate(lambda U: weight(U) * body.curvature_values(U), grid).value
    if not np.all(np.isfinite(values)) or np.min(values) <= 0.0:
        raise PreconditionError("Boundary weight must be bounded below by a positive constant")
    return total


def _check_s(body: ConvexBody, weight: Weight, s: float):
    total = total_weighted_length(body, weight)
    if not 0.0 < s <= 0.5 * total:
        raise PreconditionError(f"s = {s} outside (0, int f dmu / 2] = (0, {0.5 * total}]")


def cap_volume_offsets(body: ConvexBody, U: np.ndarray, delta: float) -> np.ndarray:
    """Vectorised cap_volume_offset: drops Delta(u) for every row of U."""
    _check_planar(body)
    _check_delta(body, delta)
    return _solve_drops(body, U, _area_fn(body, U), delta)


def surface_cap_offsets(body: ConvexBody, U: np.ndarray, weight: Weight, s: float) -> np.ndarray:
    """Vectorised surface_cap_offset."""
    _check_planar(body)
    _check_s(body, weight, s)
    return _solve_drops(body, U, _length_fn(body, weight, U), s)


def cap_volume_offset(body: ConvexBody, u, delta: float) -> CapCut:
    """
    Drop Delta with area(K ∩ {<x, u> >= h_K(u) - Delta}) = delta.

    Parameters
    ----------
    body : ConvexBody
        Planar Ellipsoid, PlanarSupport or polygon
    u : Direction
        Cap direction
    delta : float
        Cap area, 0 < delta <= |K|/2

    Returns
    -------
    CapCut

    Examples
    --------
    >>> round(cap_volume_offset(Cube(2), [1.0, 0.0], 0.2).offset_drop, 12)
    0.1
    """
    U = _unit_rows(u, body.dimension)
    drop = cap_volume_offsets(body, U, delta)
    return CapCut(U[0], float(drop[0]), float(delta))


def surface_cap_offset(body: ConvexBody, u, weight: Weight, s: float) -> CapCut:
    """
    Drop Delta such that the boundary inside the cap has f-weighted
    length s.
    """
    U = _unit_rows(u, body.dimension)
    drop = surface_cap_offsets(body, U, weight, s)
    return CapCut(U[0], float(drop[0]), float(s))


def uniform_directions(count: int) -> np.ndarray:
    if count < MIN_DIRECTIONS:
        raise PreconditionError(f"Need at least {MIN_DIRECTIONS} directions (got {count})")
    return _unit(2.0 * np.pi * np.arange(count) / count)


def _inner_body(body: ConvexBody, U: np.ndarray, drops: np.ndarray, parameter: float,
                construction: str) -> InnerBodyApprox:
    h = body.support_values(U)
    offsets = h - drops
    # cuts through the origin, up to the bisection resolution
    if np.any(offsets <= DEGENERATE_TOL * h):
        raise DegenerateBodyError(
            f"{construction} body at {parameter:g} does not contain the origin"
        )
    vertices = intersect_halfplanes(U, offsets)
    return InnerBodyApprox(U, offsets, vertices, float(parameter), len(U), construction)


def floating_body(body: ConvexBody, delta: float, Ndirs: int) -> InnerBodyApprox:
    """
    Polygon approximation of the floating body K_delta.

    Cuts caps of area delta in Ndirs uniform directions and intersects the
    remaining halfplanes. The polygon contains K_delta and converges to it
    as Ndirs grows.
    """
    U = uniform_directions(Ndirs)
    return _inner_body(body, U, cap_volume_offsets(body, U, delta), delta, "floating")


def surface_body(body: ConvexBody, weight: Weight, s: float, Ndirs: int) -> InnerBodyApprox:
    """Polygon approximation of the surface body K_{f,s}."""
    U = uniform_directions(Ndirs)
    return _inner_body(body, U, surface_cap_offsets(body, U, weight, s), s, "surface")


def polar_area(inner: InnerBodyApprox) -> float:
    """|P°| of the polygon P, exact."""
    return polygon_area(polar_polygon(inner.vertices))


def polar_volume_deficit(outer: ConvexBody, inner: InnerBodyApprox,
                         reference: str = "exact") -> float:
    """
    |inner°| - |outer°|.

    Parameters
    ----------
    outer : ConvexBody
        The body K
    inner : InnerBodyApprox
        Polygon inside K containing the origin
    reference : {'exact', 'matched'}
        'exact' takes |K°| from polar_body(K). 'matched' takes the polar of
        the polygon circumscribed about K with the same normals as
        ``inner``, so the discretisation of both polygons cancels.

    Raises
    ------
    PreconditionError
        If the inner polygon does not contain the origin
    """
    if np.any(inner.offsets <= 0.0):
        raise PreconditionError("Inner body does not contain the origin")
    inner_polar = polar_area(inner)
    if reference == "exact":
        outer_polar = volume(polar_body(outer))
    elif reference == "matched":
        circumscribed = intersect_halfplanes(inner.normals, outer.support_values(inner.normals))
        outer_polar = polygon_area(polar_polygon(circumscribed))
    else:
        raise PreconditionError(f"Unknown deficit reference: {reference}")
    return inner_polar - outer_polar
