"""
Convex body representations

Bodies are described through their support function h_K and, for the
C^2_+ kinds, the curvature function f_K (reciprocal Gaussian curvature as a
function of the outer normal). Boundary points are derived from h through
the inverse Gauss map and never stored.

Kinds
-----
Ellipsoid           E = T(B_2^n), any n, closed forms throughout
PlanarSupport       n = 2, truncated Fourier series of h(theta)
PiecewiseArc        n = 2, circular arcs joined with continuous normal
PlanarPolar         n = 2, polar of a piecewise-arc body, evaluated through it
HalfspacePolytope   {x : <n_i, x> <= b_i}, any n
Cube                B_inf^n = [-1, 1]^n
CrossPolytope       B_1^n

All bodies are immutable; every evaluation is a pure function of the body.
"""
import math
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np
from scipy import optimize
from scipy.spatial import ConvexHull, HalfspaceIntersection

from ..exceptions import (
    ConfigurationError,
    DegradedAccuracyWarning,
    GeometryError,
    PreconditionError,
    UnsupportedKindError,
)
from ..quadrature import SphereGrid, ball_volume, grid_arcs, grid_circle, integrate
from ..utils.numerics import bisect_increasing
from .polygon import (
    intersect_halfplanes,
    polygon_area,
    polygon_centroid,
    support_of_vertices,
)

UNIT_TOL = 1e-12
DEFAULT_HARMONICS = 64
CONVEXITY_GRID = 4096
POLAR_FIT_TOL = 1e-8


# ---------------------------------------------------------------------------
# Small value types
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Direction:
    """A unit vector u in S^{n-1}."""
    coords: np.ndarray

    def __post_init__(self):
        coords = np.asarray(self.coords, dtype=float).reshape(-1)
        if abs(np.linalg.norm(coords) - 1.0) > UNIT_TOL:
            raise PreconditionError(f"Direction is not a unit vector: {coords}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_vector(cls, vector: Sequence[float]) -> "Direction":
        """Normalise a non-zero vector."""
        v = np.asarray(vector, dtype=float)
        norm = np.linalg.norm(v)
        if norm == 0.0:
            raise PreconditionError("Cannot normalise the zero vector")
        return cls(v / norm)

    @classmethod
    def from_angle(cls, theta: float) -> "Direction":
        return cls(np.array([math.cos(theta), math.sin(theta)]))

    @property
    def dimension(self) -> int:
        return len(self.coords)

    @property
    def angle(self) -> float:
        """Polar angle in [0, 2 pi) (planar directions only)."""
        return float(np.mod(np.arctan2(self.coords[1], self.coords[0]), 2.0 * np.pi))


@dataclass(frozen=True, eq=False)
class BoundaryPoint:
    """
    A boundary point x = N_K^{-1}(u) with its normal data.

    support_value is <x, u> = h_K(u); curvature_fn is f_K(u) = 1/kappa_K(x).
    """
    position: np.ndarray
    normal: Direction
    support_value: float
    curvature_fn: float


@dataclass(frozen=True, eq=False)
class LinearMap:
    """A non-degenerate linear map of R^n."""
    matrix: np.ndarray
    determinant: float = None

    def __post_init__(self):
        matrix = np.atleast_2d(np.asarray(self.matrix, dtype=float))
        if matrix.shape[0] != matrix.shape[1]:
            raise ConfigurationError("Linear map must be square")
        det = float(np.linalg.det(matrix))
        if det == 0.0:
            raise ConfigurationError("Linear map is singular")
        if self.determinant is not None and abs(self.determinant - det) > 1e-10:
            raise ConfigurationError(
                f"Stated determinant {self.determinant} does not match {det}"
            )
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "determinant", det)

    @classmethod
    def diagonal(cls, entries: Sequence[float]) -> "LinearMap":
        return cls(np.diag(np.asarray(entries, dtype=float)))


UnitInput = Union[Direction, Sequence[float], np.ndarray]


def _unit_rows(u: UnitInput, n: int) -> np.ndarray:
    """Directions as an (m, n) array of unit rows."""
    arr = u.coords if isinstance(u, Direction) else np.asarray(u, dtype=float)
    arr = np.atleast_2d(arr)
    if arr.shape[1] != n:
        raise PreconditionError(f"Direction dimension {arr.shape[1]} does not match body dimension {n}")
    norms = np.linalg.norm(arr, axis=1)
    if np.any(np.abs(norms - 1.0) > 1e-9):
        raise PreconditionError("Directions must be unit vectors")
    return arr


def _angles(U: np.ndarray) -> np.ndarray:
    return np.arctan2(U[:, 1], U[:, 0])


def _unit(theta: np.ndarray) -> np.ndarray:
    return np.column_stack([np.cos(theta), np.sin(theta)])


# ---------------------------------------------------------------------------
# Body kinds
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ConvexBody:
    """
    Base class of all body kinds.

    Subclasses implement the vectorised evaluators on (m, n) arrays of unit
    vectors; the module-level operations wrap them for single directions.
    """
    dimension: int
    provenance: str = field(default="given", kw_only=True)
    fit_residual: float = field(default=0.0, kw_only=True)

    kind = "abstract"
    smooth = False
    polytope = False

    def support_values(self, U: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def radial_values(self, U: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def curvature_values(self, U: np.ndarray) -> np.ndarray:
        raise UnsupportedKindError(f"{self.kind} has no curvature function")

    def boundary_positions(self, U: np.ndarray) -> np.ndarray:
        raise UnsupportedKindError(f"Gauss map of a {self.kind} is not invertible")

    def gauss_curvatures(self, U: np.ndarray) -> np.ndarray:
        raise UnsupportedKindError(f"{self.kind} has no Gaussian curvature function")

    def closed_volume(self) -> Optional[float]:
        return None

    def describe(self) -> str:
        return f"{self.kind}(n={self.dimension})"


@dataclass(frozen=True, eq=False)
class Ellipsoid(ConvexBody):
    """
    Ellipsoid E = T(B_2^n) with semi-axes a_i along the columns of Q.

    A = T T^t = Q diag(a^2) Q^t; h_E(u) = sqrt(<A u, u>).
    """
    semi_axes: np.ndarray = None
    orientation: np.ndarray = None

    kind = "ellipsoid"
    smooth = True

    def __post_init__(self):
        axes = np.asarray(self.semi_axes, dtype=float).reshape(-1)
        if len(axes) != self.dimension or self.dimension < 2:
            raise ConfigurationError("Ellipsoid needs one semi-axis per dimension, n >= 2")
        if np.any(axes <= 0.0):
            raise ConfigurationError("Ellipsoid semi-axes must be positive")
        Q = np.eye(self.dimension) if self.orientation is None else np.asarray(self.orientation, dtype=float)
        if Q.shape != (self.dimension, self.dimension) or not np.allclose(Q.T @ Q, np.eye(self.dimension), atol=1e-10):
            raise ConfigurationError("Ellipsoid orientation must be an orthogonal matrix")
        object.__setattr__(self, "semi_axes", axes)
        object.__setattr__(self, "orientation", Q)

    @classmethod
    def from_matrix(cls, A: np.ndarray, **kwargs) -> "Ellipsoid":
        """Build from the positive definite matrix A = T T^t (axes sorted descending)."""
        A = 0.5 * (A + A.T)
        eigvals, eigvecs = np.linalg.eigh(A)
        if np.any(eigvals <= 0.0):
            raise GeometryError("Ellipsoid matrix is not positive definite")
        order = np.argsort(eigvals)[::-1]
        return cls(len(eigvals), semi_axes=np.sqrt(eigvals[order]),
                   orientation=eigvecs[:, order], **kwargs)

    @property
    def matrix(self) -> np.ndarray:
        Q = self.orientation
        return Q @ np.diag(self.semi_axes ** 2) @ Q.T

    @property
    def determinant(self) -> float:
        """det A = (prod a_i)^2."""
        return float(np.prod(self.semi_axes) ** 2)

    def support_values(self, U):
        return np.sqrt(np.einsum("ij,jk,ik->i", U, self.matrix, U))

    def radial_values(self, U):
        A_inv = np.linalg.inv(self.matrix)
        return 1.0 / np.sqrt(np.einsum("ij,jk,ik->i", U, A_inv, U))

    def curvature_values(self, U):
        return self.determinant / self.support_values(U) ** (self.dimension + 1)

    def boundary_positions(self, U):
        return (U @ self.matrix) / self.support_values(U)[:, None]

    def gauss_curvatures(self, U):
        # quadric formula at x: 1 / (det A * (x^t A^-2 x)^{(n+1)/2})
        X = self.boundary_positions(U)
        A_inv = np.linalg.inv(self.matrix)
        grad = X @ A_inv
        q = np.einsum("ij,ij->i", grad, grad)
        return 1.0 / (self.determinant * q ** ((self.dimension + 1) / 2.0))

    def closed_volume(self):
        return ball_volume(self.dimension) * float(np.prod(self.semi_axes))

    def describe(self):
        axes = ",".join(f"{a:g}" for a in self.semi_axes)
        return f"ellipsoid({axes})"


class PlanarParametrized:
    """
    Mixin for planar bodies parametrised by the normal angle theta.

    Subclasses provide h(theta), h'(theta), f(theta) = h + h''; the mixin
    derives support, boundary, curvature and radial evaluators.
    """

    def h_theta(self, theta):
        raise NotImplementedError

    def dh_theta(self, theta):
        raise NotImplementedError

    def f_theta(self, theta):
        raise NotImplementedError

    def position_theta(self, theta):
        """x(theta) = h e(theta) + h'(theta) e'(theta)."""
        theta = np.asarray(theta, dtype=float)
        h, dh = self.h_theta(theta), self.dh_theta(theta)
        c, s = np.cos(theta), np.sin(theta)
        return np.column_stack([h * c - dh * s, h * s + dh * c])

    def support_values(self, U):
        return self.h_theta(_angles(U))

    def curvature_values(self, U):
        return self.f_theta(_angles(U))

    def boundary_positions(self, U):
        return self.position_theta(_angles(U))

    def normal_angle_at(self, psi):
        """Normal angle theta of the boundary point in direction psi."""
        # the normal at the boundary point in direction psi is within pi/2 of psi
        psi = np.asarray(psi, dtype=float)

        def relative_angle(theta):
            x = self.position_theta(theta)
            return np.arctan2(x[:, 1] * np.cos(psi) - x[:, 0] * np.sin(psi),
                              x[:, 0] * np.cos(psi) + x[:, 1] * np.sin(psi))

        return bisect_increasing(relative_angle, psi - 0.5 * np.pi, psi + 0.5 * np.pi,
                                 np.zeros_like(psi))

    def radial_values(self, U):
        return np.linalg.norm(self.position_theta(self.normal_angle_at(_angles(U))), axis=1)


@dataclass(frozen=True, eq=False)
class PlanarSupport(PlanarParametrized, ConvexBody):
    """
    Planar body with h(theta) = a_0 + sum_k a_k cos(k theta) + b_k sin(k theta).

    Construction checks h > 0 (origin interior) and h + h'' > 0 (C^2_+) on
    a uniform grid of ``convexity_grid`` angles.
    """
    cos_coeffs: np.ndarray = None
    sin_coeffs: np.ndarray = None
    convexity_grid: int = CONVEXITY_GRID

    kind = "planar_support"
    smooth = True

    def __post_init__(self):
        a = np.asarray(self.cos_coeffs, dtype=float).reshape(-1)
        b = np.zeros_like(a) if self.sin_coeffs is None else np.asarray(self.sin_coeffs, dtype=float).reshape(-1)
        if self.dimension != 2:
            raise ConfigurationError("PlanarSupport bodies are planar (n = 2)")
        if len(a) < 1 or len(b) != len(a):
            raise ConfigurationError("Cosine and sine coefficient arrays must have equal length")
        b = b.copy()
        b[0] = 0.0
        object.__setattr__(self, "cos_coeffs", a)
        object.__setattr__(self, "sin_coeffs", b)

        theta = 2.0 * np.pi * np.arange(self.convexity_grid) / self.convexity_grid
        if np.min(self.h_theta(theta)) <= 0.0:
            raise PreconditionError("Origin is not interior: h(theta) <= 0 somewhere")
        if np.min(self.f_theta(theta)) <= 0.0:
            raise GeometryError("Support function violates h + h'' > 0 (not C^2_+)")

    @property
    def harmonics(self) -> int:
        return len(self.cos_coeffs) - 1

    def _series(self, theta, derivative: int):
        theta = np.asarray(theta, dtype=float)
        k = np.arange(len(self.cos_coeffs))
        kt = np.outer(theta, k)
        c, s = np.cos(kt), np.sin(kt)
        a, b = self.cos_coeffs, self.sin_coeffs
        # d/dtheta rotates (cos, sin) -> (-sin, cos) and multiplies by k
        if derivative % 4 == 0:
            terms = c * a + s * b
        elif derivative % 4 == 1:
            terms = -s * a + c * b
        elif derivative % 4 == 2:
            terms = -(c * a + s * b)
        else:
            terms = s * a - c * b
        return terms @ (k.astype(float) ** derivative)

    def h_theta(self, theta):
        return self._series(theta, 0)

    def dh_theta(self, theta):
        return self._series(theta, 1)

    def f_theta(self, theta):
        return self._series(theta, 0) + self._series(theta, 2)

    def gauss_curvatures(self, U):
        # curvature of the parametrised curve x(theta) from its derivatives
        theta = _angles(U)
        h, d1, d2, d3 = (self._series(theta, j) for j in range(4))
        c, s = np.cos(theta), np.sin(theta)
        xp = np.column_stack([(d1 * c - h * s) - (d2 * s + d1 * c),
                              (d1 * s + h * c) + (d2 * c - d1 * s)])
        xpp = np.column_stack([-(h + d2) * c - (d1 + d3) * s,
                               -(h + d2) * s + (d1 + d3) * c])
        cross = np.abs(xp[:, 0] * xpp[:, 1] - xp[:, 1] * xpp[:, 0])
        return cross / np.linalg.norm(xp, axis=1) ** 3

    def translated(self, t: Sequence[float]) -> "PlanarSupport":
        """Body K + t: h gains <t, e(theta)>."""
        a, b = self.cos_coeffs.copy(), self.sin_coeffs.copy()
        if len(a) < 2:
            a, b = np.append(a, 0.0), np.append(b, 0.0)
        a[1] += t[0]
        b[1] += t[1]
        return PlanarSupport(2, cos_coeffs=a, sin_coeffs=b, convexity_grid=self.convexity_grid,
                             provenance=self.provenance, fit_residual=self.fit_residual)

    def closed_volume(self):
        # |K| = 1/2 int h (h + h'') dtheta = pi a_0^2 + pi/2 sum (1 - k^2)(a_k^2 + b_k^2)
        k = np.arange(len(self.cos_coeffs))
        a, b = self.cos_coeffs, self.sin_coeffs
        return float(np.pi * a[0] ** 2 + 0.5 * np.pi * np.sum(((1 - k ** 2) * (a ** 2 + b ** 2))[1:]))

    def describe(self):
        return f"planar_support(harmonics={self.harmonics})"


@dataclass(frozen=True, eq=False)
class Arc:
    """Circular arc with outer normals in [start, end] (radians, end > start)."""
    center: np.ndarray
    radius: float
    start: float
    end: float


@dataclass(frozen=True, eq=False)
class PiecewiseArc(PlanarParametrized, ConvexBody):
    """
    Planar body bounded by circular arcs in increasing normal angle.

    The arcs' normal spans tile one full turn and consecutive arcs meet
    continuously, which makes the boundary convex with f_K = r on each span.
    """
    arcs: tuple = ()

    kind = "piecewise_arc"
    smooth = True

    def __post_init__(self):
        if self.dimension != 2:
            raise ConfigurationError("PiecewiseArc bodies are planar (n = 2)")
        arcs = tuple(self.arcs)
        if len(arcs) < 1:
            raise ConfigurationError("PiecewiseArc needs at least one arc")
        starts = np.array([a.start for a in arcs], dtype=float)
        ends = np.array([a.end for a in arcs], dtype=float)
        radii = np.array([a.radius for a in arcs], dtype=float)
        centers = np.array([np.asarray(a.center, dtype=float) for a in arcs])
        if np.any(radii <= 0.0) or np.any(ends <= starts):
            raise GeometryError("Arcs need positive radius and increasing normal span")
        if np.any(np.abs(starts[1:] - ends[:-1]) > 1e-9) or abs(ends[-1] - starts[0] - 2.0 * np.pi) > 1e-9:
            raise GeometryError("Arc normal spans must tile one full turn in order")
        scale = float(np.max(np.abs(centers)) + np.max(radii))
        for i in range(len(arcs)):
            j = (i + 1) % len(arcs)
            p_end = centers[i] + radii[i] * np.array([math.cos(ends[i]), math.sin(ends[i])])
            p_next = centers[j] + radii[j] * np.array([math.cos(starts[j]), math.sin(starts[j])])
            if np.linalg.norm(p_end - p_next) > 1e-9 * scale:
                raise GeometryError(f"Arcs {i} and {j} do not join continuously")
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "_starts", starts)
        object.__setattr__(self, "_radii", radii)
        object.__setattr__(self, "_centers", centers)

        theta = 2.0 * np.pi * np.arange(CONVEXITY_GRID) / CONVEXITY_GRID
        if np.min(self.h_theta(theta)) <= 0.0:
            raise PreconditionError("Origin is not interior: h(theta) <= 0 somewhere")

    @property
    def breakpoints(self) -> np.ndarray:
        return self._starts

    def _index(self, theta):
        t = self._starts[0] + np.mod(np.asarray(theta, dtype=float) - self._starts[0], 2.0 * np.pi)
        return np.clip(np.searchsorted(self._starts, t, side="right") - 1, 0, len(self.arcs) - 1)

    def h_theta(self, theta):
        i = self._index(theta)
        c = self._centers[i]
        return c[:, 0] * np.cos(theta) + c[:, 1] * np.sin(theta) + self._radii[i]

    def dh_theta(self, theta):
        i = self._index(theta)
        c = self._centers[i]
        return -c[:, 0] * np.sin(theta) + c[:, 1] * np.cos(theta)

    def f_theta(self, theta):
        return self._radii[self._index(theta)]

    def gauss_curvatures(self, U):
        return 1.0 / self._radii[self._index(_angles(U))]

    def translated(self, t: Sequence[float]) -> "PiecewiseArc":
        t = np.asarray(t, dtype=float)
        arcs = tuple(Arc(a.center + t, a.radius, a.start, a.end) for a in self.arcs)
        return PiecewiseArc(2, arcs=arcs, provenance=self.provenance)

    def closed_volume(self):
        # 1/2 int (<c, e> + r) r dtheta, exactly per arc
        total = 0.0
        for a in self.arcs:
            cx, cy = a.center
            total += 0.5 * a.radius * (cx * (math.sin(a.end) - math.sin(a.start))
                                       - cy * (math.cos(a.end) - math.cos(a.start))
                                       + a.radius * (a.end - a.start))
        return total

    def describe(self):
        return f"piecewise_arc(arcs={len(self.arcs)})"


@dataclass(frozen=True, eq=False)
class PlanarPolar(PlanarParametrized, ConvexBody):
    """
    Polar K° of a planar C^2_+ body, evaluated through K.

    For the normal angle phi of K°, let x be the boundary point of K in
    direction e(phi) and theta its normal angle. Then
    h_K°(phi) = 1 / rho_K(phi) = 1 / |x| and
    f_K°(phi) = |x|^3 / (f_K(theta) h_K(theta)^3).
    """
    outer: ConvexBody = None

    kind = "planar_polar"
    smooth = True

    def __post_init__(self):
        if not isinstance(self.outer, PlanarParametrized) or self.outer.dimension != 2:
            raise UnsupportedKindError("PlanarPolar needs a planar body parametrised by normal angle")

    @property
    def breakpoints(self) -> np.ndarray:
        """Directions of the arc joints of K, where f_K° jumps."""
        if not isinstance(self.outer, PiecewiseArc):
            raise UnsupportedKindError(f"{self.outer.describe()} has no arc joints")
        x = self.outer.position_theta(self.outer.breakpoints)
        phi = np.arctan2(x[:, 1], x[:, 0])
        return np.sort(phi[0] + np.mod(phi - phi[0], 2.0 * np.pi))

    def _outer_point(self, phi):
        theta = self.outer.normal_angle_at(phi)
        return theta, self.outer.position_theta(theta)

    def h_theta(self, phi):
        _, x = self._outer_point(phi)
        return 1.0 / np.linalg.norm(x, axis=1)

    def dh_theta(self, phi):
        # rho'/rho = tan(phi - theta) along the boundary of K
        theta, x = self._outer_point(phi)
        return -np.tan(np.asarray(phi, dtype=float) - theta) / np.linalg.norm(x, axis=1)

    def f_theta(self, phi):
        theta, x = self._outer_point(phi)
        h = self.outer.h_theta(theta)
        return np.linalg.norm(x, axis=1) ** 3 / (self.outer.f_theta(theta) * h ** 3)

    def radial_values(self, U):
        return 1.0 / self.outer.support_values(U)

    def gauss_curvatures(self, U):
        return 1.0 / self.f_theta(_angles(U))

    def closed_volume(self):
        # |K°| = 1/2 int h_K^{-2} dtheta, on the arc grid of K when it has one
        if isinstance(self.outer, PiecewiseArc):
            grid = grid_arcs(self.outer.breakpoints, 64)
        else:
            grid = grid_circle(CONVEXITY_GRID)
        return float(0.5 * np.sum(grid.weights / self.outer.support_values(grid.nodes) ** 2))

    def describe(self):
        return f"planar_polar({self.outer.describe()})"


@dataclass(frozen=True, eq=False)
class HalfspacePolytope(ConvexBody):
    """Polytope {x : <n_i, x> <= b_i} with unit normals and offsets b_i > 0."""
    normals: np.ndarray = None
    offsets: np.ndarray = None

    kind = "halfspace_polytope"
    polytope = True

    def __post_init__(self):
        N = np.atleast_2d(np.asarray(self.normals, dtype=float))
        b = np.asarray(self.offsets, dtype=float).reshape(-1)
        if N.shape != (len(b), self.dimension):
            raise ConfigurationError("Polytope normals and offsets disagree in shape")
        norms = np.linalg.norm(N, axis=1)
        if np.any(norms == 0.0):
            raise ConfigurationError("Polytope normals must be non-zero")
        b = b / norms
        N = N / norms[:, None]
        if np.any(b <= 0.0):
            raise PreconditionError("Origin is not interior: some offset b_i <= 0")
        object.__setattr__(self, "normals", N)
        object.__setattr__(self, "offsets", b)
        object.__setattr__(self, "vertices", self._enumerate_vertices())

    def _enumerate_vertices(self) -> np.ndarray:
        bound = 1e3 * float(np.max(self.offsets))
        if self.dimension == 2:
            verts = intersect_halfplanes(self.normals, self.offsets, bound=bound)
        else:
            halfspaces = np.column_stack([self.normals, -self.offsets])
            verts = HalfspaceIntersection(halfspaces, np.zeros(self.dimension)).intersections
            verts = verts[ConvexHull(verts).vertices]
        if np.max(np.abs(verts)) >= 0.5 * bound or not np.all(np.isfinite(verts)):
            raise GeometryError("Halfspaces do not bound a polytope")
        return verts

    def support_values(self, U):
        return support_of_vertices(self.vertices, U)

    def radial_values(self, U):
        proj = U @ self.normals.T
        with np.errstate(divide="ignore"):
            t = np.where(proj > 0.0, self.offsets[None, :] / proj, np.inf)
        return np.min(t, axis=1)

    def closed_volume(self):
        if self.dimension == 2:
            return abs(polygon_area(self.vertices))
        return float(ConvexHull(self.vertices).volume)

    def describe(self):
        return f"halfspace_polytope(n={self.dimension}, facets={len(self.offsets)})"


@dataclass(frozen=True, eq=False)
class Cube(ConvexBody):
    """B_inf^n = [-1, 1]^n."""
    kind = "cube"
    polytope = True

    def __post_init__(self):
        if self.dimension < 2:
            raise ConfigurationError("Cube needs n >= 2")

    def support_values(self, U):
        return np.sum(np.abs(U), axis=1)

    def radial_values(self, U):
        return 1.0 / np.max(np.abs(U), axis=1)

    def closed_volume(self):
        return float(2 ** self.dimension)


@dataclass(frozen=True, eq=False)
class CrossPolytope(ConvexBody):
    """B_1^n, the convex hull of +-e_i."""
    kind = "cross_polytope"
    polytope = True

    def __post_init__(self):
        if self.dimension < 2:
            raise ConfigurationError("CrossPolytope needs n >= 2")

    def support_values(self, U):
        return np.max(np.abs(U), axis=1)

    def radial_values(self, U):
        return 1.0 / np.sum(np.abs(U), axis=1)

    def closed_volume(self):
        return float(2 ** self.dimension / math.factorial(self.dimension))


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def unit_ball(n: int = 2) -> Ellipsoid:
    """Euclidean unit ball B_2^n."""
    return Ellipsoid(n, semi_axes=np.ones(n), provenance="unit-ball")


def make_disc_support(harmonics: int = 0) -> PlanarSupport:
    """Unit disc as a PlanarSupport body (h = 1)."""
    a = np.zeros(harmonics + 1)
    a[0] = 1.0
    return PlanarSupport(2, cos_coeffs=a, sin_coeffs=np.zeros_like(a))


def make_rounded_intersection(R: float, eps: float) -> PiecewiseArc:
    """
    Intersection of four discs of radius R centred at (+-(R-1), 0),
    (0, +-(R-1)) with its corners rounded by arcs of radius eps.

    Each corner arc is internally tangent to its two neighbouring big
    circles: its centre c satisfies |c - C| = R - eps for both big centres C.

    Parameters
    ----------
    R : float
        Big radius, R > 1
    eps : float
        Corner radius, 0 < eps < 1

    Returns
    -------
    PiecewiseArc
        Eight arcs alternating big side arcs and corner arcs
    """
    if not (R > 1.0 and 0.0 < eps < 1.0):
        raise ConfigurationError(f"Rounded intersection needs R > 1 and 0 < eps < 1 (got {R}, {eps})")
    d = R - 1.0
    disc = 2.0 * (R - eps) ** 2 - d ** 2
    if disc <= 0.0:
        raise GeometryError("Corner circle cannot be tangent to both big circles")
    # corner centre (t, t) in the first quadrant, tangent to the circles
    # centred at (-d, 0) and (0, -d)
    t = 0.5 * (-d + math.sqrt(disc))
    if t <= 0.0 or t + eps >= R:
        raise GeometryError("Tangency solution is outside the admissible range")
    half_span = math.atan2(t, d + t)

    arcs = []
    for q in range(4):
        side = 0.5 * np.pi * q
        # big arc facing direction `side`, centred at -d * e(side)
        center_big = -d * np.array([math.cos(side), math.sin(side)])
        arcs.append(Arc(center_big, R, side - half_span, side + half_span))
        rot = np.array([[math.cos(side), -math.sin(side)], [math.sin(side), math.cos(side)]])
        center_corner = rot @ np.array([t, t])
        arcs.append(Arc(center_corner, eps, side + half_span, side + 0.5 * np.pi - half_span))
    return PiecewiseArc(2, arcs=tuple(arcs), provenance=f"rounded-intersection(R={R:g},eps={eps:g})")


def polygon_vertices(body: ConvexBody) -> np.ndarray:
    """
    Counter-clockwise vertices of a planar polytope body.

    Raises
    ------
    UnsupportedKindError
        For non-polytope or non-planar bodies
    """
    if body.dimension != 2 or not body.polytope:
        raise UnsupportedKindError(f"{body.describe()} is not a planar polytope")
    if isinstance(body, Cube):
        return np.array([[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]])
    if isinstance(body, CrossPolytope):
        return np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]])
    return body.vertices


def _facets(body: ConvexBody):
    """Halfspace description (normals, offsets) of a polytope kind."""
    n = body.dimension
    if isinstance(body, HalfspacePolytope):
        return body.normals, body.offsets
    if isinstance(body, Cube):
        eye = np.eye(n)
        return np.vstack([eye, -eye]), np.ones(2 * n)
    if isinstance(body, CrossPolytope):
        signs = np.array(np.meshgrid(*[[-1.0, 1.0]] * n, indexing="ij")).reshape(n, -1).T
        return signs / math.sqrt(n), np.full(len(signs), 1.0 / math.sqrt(n))
    raise UnsupportedKindError(f"{body.describe()} is not a polytope")


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def _require_smooth(body: ConvexBody):
    if not body.smooth:
        raise UnsupportedKindError(
            f"{body.describe()}: the Gauss map is not invertible on polytopes"
        )


def support(body: ConvexBody, u: UnitInput) -> float:
    """
    Support function h_K(u) = max over K of <x, u>.

    Examples
    --------
    >>> support(Cube(2), Direction.from_vector([1, 1]))
    1.4142135623730951
    """
    return float(body.support_values(_unit_rows(u, body.dimension))[0])


def boundary_point(body: ConvexBody, u: UnitInput) -> BoundaryPoint:
    """
    Inverse Gauss map: the boundary point x with N_K(x) = u.

    Parameters
    ----------
    body : ConvexBody
        A C^2_+-representable body (Ellipsoid, PlanarSupport, PiecewiseArc)
    u : Direction
        Outer unit normal

    Returns
    -------
    BoundaryPoint
        Position, normal, h_K(u) and f_K(u)

    Raises
    ------
    UnsupportedKindError
        For polytope kinds
    """
    _require_smooth(body)
    U = _unit_rows(u, body.dimension)
    direction = u if isinstance(u, Direction) else Direction(U[0])
    return BoundaryPoint(
        position=body.boundary_positions(U)[0],
        normal=direction,
        support_value=float(body.support_values(U)[0]),
        curvature_fn=float(body.curvature_values(U)[0]),
    )


def curvature_function(body: ConvexBody, u: UnitInput) -> float:
    """Curvature function f_K(u) = 1 / kappa_K(N_K^{-1}(u))."""
    _require_smooth(body)
    return float(body.curvature_values(_unit_rows(u, body.dimension))[0])


def gauss_curvature_at(body: ConvexBody, u: UnitInput) -> np.ndarray:
    """
    Gaussian curvature kappa_K at N_K^{-1}(u), computed from the boundary
    geometry (quadric or curve formula) rather than from f_K.
    """
    _require_smooth(body)
    return body.gauss_curvatures(_unit_rows(u, body.dimension))


def radial(body: ConvexBody, u: UnitInput) -> float:
    """Radial function rho_K(u) = max{t > 0 : t u in K}."""
    return float(body.radial_values(_unit_rows(u, body.dimension))[0])


def _check_grid(body: ConvexBody, grid: SphereGrid):
    if grid.dimension != body.dimension:
        raise ConfigurationError(
            f"Grid dimension {grid.dimension} does not match body dimension {body.dimension}"
        )
    if len(grid) < 8:
        raise ConfigurationError("Grid too coarse: fewer than 8 nodes")


def polar_support(body: ConvexBody, v: UnitInput, grid: SphereGrid) -> float:
    """
    Support function of the polar body, h_{K°}(v) = max_u <u, v> / h_K(u).

    Closed forms are used for ellipsoids and polytopes. Other kinds take the
    best grid node and refine it by a bounded scalar search (scipy) over
    the neighbouring angular cell.

    Raises
    ------
    ConfigurationError
        If the grid has fewer than 8 nodes or the wrong dimension
    """
    _check_grid(body, grid)
    V = _unit_rows(v, body.dimension)
    if isinstance(body, Ellipsoid):
        return float(np.sqrt(V[0] @ np.linalg.inv(body.matrix) @ V[0]))
    if isinstance(body, Cube):
        return float(np.max(np.abs(V[0])))
    if isinstance(body, CrossPolytope):
        return float(np.sum(np.abs(V[0])))
    if isinstance(body, HalfspacePolytope):
        return float(np.max((body.normals @ V[0]) / body.offsets))

    ratios = (grid.nodes @ V[0]) / body.support_values(grid.nodes)
    best = int(np.argmax(ratios))
    if body.dimension != 2:
        return float(ratios[best])
    theta0 = float(np.arctan2(grid.nodes[best, 1], grid.nodes[best, 0]))
    cell = 2.0 * np.pi / len(grid)

    def negative_ratio(theta):
        e = _unit(np.array([theta]))
        return -float((e @ V[0])[0] / body.support_values(e)[0])

    res = optimize.minimize_scalar(negative_ratio, bounds=(theta0 - cell, theta0 + cell),
                                   method="bounded", options={"xatol": 1e-10})
    return max(float(ratios[best]), -float(res.fun))


def _fit_planar_support(directions_angle: np.ndarray, values: np.ndarray, harmonics: int):
    k = np.arange(1, harmonics + 1)
    kt = np.outer(directions_angle, k)
    design = np.hstack([np.ones((len(values), 1)), np.cos(kt), np.sin(kt)])
    coeffs, *_ = np.linalg.lstsq(design, values, rcond=None)
    residual = float(np.max(np.abs(design @ coeffs - values)))
    a = coeffs[:harmonics + 1]
    b = np.concatenate([[0.0], coeffs[harmonics + 1:]])
    return a, b, residual


def _fitted_body(a, b, residual, provenance, tol=POLAR_FIT_TOL) -> PlanarSupport:
    if residual > tol:
        warnings.warn(
            f"{provenance}: Fourier fit residual {residual:.3e} exceeds {tol:.1e}",
            DegradedAccuracyWarning,
        )
    try:
        return PlanarSupport(2, cos_coeffs=a, sin_coeffs=b, provenance=provenance,
                             fit_residual=residual)
    except GeometryError as e:
        raise GeometryError(f"{provenance}: fitted support function is not C^2_+ ({e})") from e


def polar_body(body: ConvexBody, harmonics: int = DEFAULT_HARMONICS,
               samples: int = CONVEXITY_GRID) -> ConvexBody:
    """
    Polar body K° = {y : <x, y> <= 1 for all x in K}.

    Exact for Ellipsoid (inverse matrix), Cube <-> CrossPolytope and
    HalfspacePolytope (vertex duality). PiecewiseArc bodies get a PlanarPolar
    evaluated exactly through h_K° = 1 / rho_K. PlanarSupport bodies are
    fitted: the polar boundary point u / h_K(u) has outer normal y / |y| with
    y = N_K^{-1}(u), so h_{K°}(y / |y|) = 1 / |y| gives exact support
    samples, to which a least-squares Fourier series is fitted. The fit
    residual is carried in ``fit_residual`` and the method in ``provenance``.
    """
    if isinstance(body, Ellipsoid):
        return Ellipsoid.from_matrix(np.linalg.inv(body.matrix), provenance="polar-closed-form")
    if isinstance(body, Cube):
        return CrossPolytope(body.dimension, provenance="polar-closed-form")
    if isinstance(body, CrossPolytope):
        return Cube(body.dimension, provenance="polar-closed-form")
    if isinstance(body, HalfspacePolytope):
        verts = body.vertices
        norms = np.linalg.norm(verts, axis=1)
        return HalfspacePolytope(body.dimension, normals=verts / norms[:, None], offsets=1.0 / norms,
                                 provenance="polar-vertex-duality")
    if isinstance(body, PiecewiseArc):
        return PlanarPolar(2, outer=body, provenance="polar-radial-duality")
    if isinstance(body, PlanarSupport):
        theta = 2.0 * np.pi * np.arange(samples) / samples
        Y = body.position_theta(theta)
        radius = np.linalg.norm(Y, axis=1)
        a, b, residual = _fit_planar_support(np.arctan2(Y[:, 1], Y[:, 0]), 1.0 / radius, harmonics)
        return _fitted_body(a, b, residual, "polar-fourier-fit")
    raise UnsupportedKindError(f"No polar construction for {body.describe()}")


def volume(body: ConvexBody, grid: Optional[SphereGrid] = None) -> float:
    """
    Volume |K|.

    Closed forms for ellipsoids, cubes, cross-polytopes, halfspace
    polytopes and arc bodies; otherwise (1/n) int rho_K^n dsigma on the grid.
    """
    closed = body.closed_volume()
    if closed is not None:
        return closed
    if grid is None:
        grid = grid_circle(CONVEXITY_GRID)
    _check_grid(body, grid)
    n = body.dimension
    return integrate(lambda U: body.radial_values(U) ** n, grid).value / n


def cauchy_volume(body: ConvexBody, grid: SphereGrid) -> float:
    """(1/n) int h_K f_K dsigma, which equals |K| for C^2_+ bodies."""
    _require_smooth(body)
    _check_grid(body, grid)
    result = integrate(lambda U: body.support_values(U) * body.curvature_values(U), grid)
    return result.value / body.dimension


def linear_image(body: ConvexBody, T: LinearMap, harmonics: Optional[int] = None) -> ConvexBody:
    """
    Image T(K) of a body under a non-degenerate linear map.

    Ellipsoids map in closed form (A -> T A T^t), polytopes through their
    facets (n -> T^{-t} n). PlanarSupport bodies are resampled with
    h_{TK}(u) = h_K(T^t u / |T^t u|) |T^t u| and refitted to a Fourier series.
    """
    M = T.matrix
    if M.shape != (body.dimension, body.dimension):
        raise ConfigurationError("Linear map dimension does not match the body")
    if isinstance(body, Ellipsoid):
        return Ellipsoid.from_matrix(M @ body.matrix @ M.T, provenance="linear-image")
    if body.polytope:
        normals, offsets = _facets(body)
        image_normals = normals @ np.linalg.inv(M)
        return HalfspacePolytope(body.dimension, normals=image_normals, offsets=offsets,
                                 provenance="linear-image")
    if isinstance(body, PlanarSupport):
        harmonics = harmonics or max(body.harmonics, DEFAULT_HARMONICS)
        theta = 2.0 * np.pi * np.arange(CONVEXITY_GRID) / CONVEXITY_GRID
        W = _unit(theta) @ M
        scale = np.linalg.norm(W, axis=1)
        values = body.support_values(W / scale[:, None]) * scale
        a, b, residual = _fit_planar_support(theta, values, harmonics)
        return _fitted_body(a, b, residual, "linear-image-fit")
    raise UnsupportedKindError(f"No linear image for {body.describe()}")


def centroid(body: ConvexBody, grid: Optional[SphereGrid] = None) -> np.ndarray:
    """
    Centroid of K.

    Planar smooth kinds use the boundary fan formula
    c = (1 / (3|K|)) int x(theta) h f dtheta; polygons the shoelace centroid;
    centrally symmetric closed-form kinds return the origin.
    """
    if isinstance(body, (Ellipsoid, Cube, CrossPolytope)):
        return np.zeros(body.dimension)
    if body.polytope and body.dimension == 2:
        return polygon_centroid(polygon_vertices(body))
    if isinstance(body, PiecewiseArc):
        grid = grid_arcs(body.breakpoints, 32)
    elif isinstance(body, PlanarSupport):
        grid = grid or grid_circle(CONVEXITY_GRID)
    else:
        raise UnsupportedKindError(f"No centroid computation for {body.describe()}")
    area = volume(body, grid)
    out = []
    for axis in range(2):
        moment = integrate(lambda U: body.boundary_positions(U)[:, axis]
                           * body.support_values(U) * body.curvature_values(U), grid)
        out.append(moment.value / (3.0 * area))
    return np.array(out)


def recenter(body: ConvexBody, grid: Optional[SphereGrid] = None) -> ConvexBody:
    """Translate a planar body so its numeric centroid sits at the origin."""
    c = centroid(body, grid)
    if np.allclose(c, 0.0, atol=1e-15):
        return body
    if isinstance(body, (PlanarSupport, PiecewiseArc)):
        return body.translated(-c)
    if isinstance(body, HalfspacePolytope):
        return HalfspacePolytope(body.dimension, normals=body.normals,
                                 offsets=body.offsets - body.normals @ c,
                                 provenance=body.provenance)
    raise UnsupportedKindError(f"Cannot translate {body.describe()}")


@dataclass(frozen=True)
class CurvatureDualityResult:
    """Relative residual of <y,N_K(y)><x,N_K°(x)> = (kappa_K kappa_K°)^{1/(n+1)}."""
    residual: float
    lhs: float
    rhs: float
    polar_fit_residual: float
    degraded: bool


def curvature_duality_check(body: ConvexBody, u: UnitInput, grid: SphereGrid,
                            polar: Optional[ConvexBody] = None) -> CurvatureDualityResult:
    """
    Check the pointwise curvature relation between K and K°.

    With y = N_K^{-1}(u), the polar point x = u / h_K(u) satisfies
    <x, y> = 1, N_K°(x) = y / |y| and <x, N_K°(x)> = 1 / |y|.

    Parameters
    ----------
    body : ConvexBody
        C^2_+-representable body
    u : Direction
        Normal at the boundary point of K
    grid : SphereGrid
        Grid used for validation of the polar computation
    polar : ConvexBody, optional
        Precomputed polar_body(body)

    Returns
    -------
    CurvatureDualityResult
        ``degraded`` is set (and a DegradedAccuracyWarning emitted) when the
        polar fit residual is above tolerance
    """
    _require_smooth(body)
    _check_grid(body, grid)
    if polar is None:
        polar = polar_body(body)
    n = body.dimension
    U = _unit_rows(u, n)
    y = body.boundary_positions(U)[0]
    h = float(body.support_values(U)[0])
    w = y / np.linalg.norm(y)
    x_dot_n_polar = 1.0 / float(np.linalg.norm(y))

    kappa = 1.0 / float(body.curvature_values(U)[0])
    kappa_polar = 1.0 / float(polar.curvature_values(w[None, :])[0])
    lhs = h * x_dot_n_polar
    rhs = (kappa * kappa_polar) ** (1.0 / (n + 1))
    degraded = polar.fit_residual > POLAR_FIT_TOL
    if degraded:
        warnings.warn(
            f"Curvature duality check on {body.describe()} uses a polar fit with "
            f"residual {polar.fit_residual:.3e}",
            DegradedAccuracyWarning,
        )
    return CurvatureDualityResult(abs(lhs - rhs) / rhs, lhs, rhs, polar.fit_residual, degraded)
