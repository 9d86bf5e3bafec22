"""
L_p affine surface area functionals

For real p != -n and a C^2_+ body,

    as_p(K) = int_{S^{n-1}} f_K(u)^{n/(n+p)} / h_K(u)^{n(p-1)/(n+p)} dsigma(u),

the two infinite exponents share the endpoint value int h_K^{-n} dsigma =
n|K°|, and p = -n is replaced by the sup-form max f_K^{1/2} h_K^{(n+1)/2}.
"""
import math
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

import numpy as np
from scipy import optimize

from ..bodies.convex import ConvexBody, Cube, CrossPolytope, Ellipsoid, _unit_rows, volume
from ..exceptions import ConfigurationError, ExponentError, UnsupportedKindError
from ..quadrature import IntegralResult, SphereGrid, ball_volume, integrate

POLE_TOL = 1e-6
SUP_XATOL = 1e-10

POLYTOPE_CAVEAT = (
    "p < -n on a polytope: integrand vanishes a.e., value 0 by convention"
)


@dataclass(frozen=True)
class AsaValue:
    """
    A computed as_p value.

    ``divergent`` and a finite ``value`` are exclusive: divergent values
    carry value = inf.
    """
    p: float
    value: float
    method: str
    error_estimate: float
    nodes_used: int = 0
    divergent: bool = False
    caveat: Optional[str] = None

    @property
    def relative_error(self) -> float:
        if self.divergent:
            return math.inf
        if self.value == 0.0:
            return 0.0
        return self.error_estimate / abs(self.value)


def check_exponent(p: float, n: int) -> float:
    """
    Validate an exponent against the pole p = -n.

    Raises
    ------
    ExponentError
        If |n + p| < 1e-6
    """
    p = float(p)
    if math.isnan(p):
        raise ExponentError("Exponent p is NaN")
    if math.isfinite(p) and abs(n + p) < POLE_TOL:
        raise ExponentError(f"p = {p} is at the pole p = -n (n = {n}); use asa_minus_n")
    return p


def sphere_exponents(p: float, n: int) -> Tuple[float, float]:
    """Exponents (alpha, beta) of f_K^alpha h_K^beta in the sphere form."""
    if math.isinf(p):
        return 0.0, -float(n)
    return n / (n + p), -n * (p - 1.0) / (n + p)


def _check_grid(body: ConvexBody, grid: SphereGrid):
    if grid.dimension != body.dimension:
        raise ConfigurationError(
            f"Grid dimension {grid.dimension} does not match body dimension {body.dimension}"
        )


def _from_integral(p: float, result: IntegralResult, method: str) -> AsaValue:
    return AsaValue(p, result.value, method, result.error_estimate,
                    nodes_used=result.nodes_used, divergent=result.divergent)


def _polytope_value(body: ConvexBody, p: float, grid: SphereGrid) -> AsaValue:
    n = body.dimension
    if p == 0.0:
        return AsaValue(p, n * volume(body), "closed-form", 0.0)
    if p > 0.0:
        return AsaValue(p, 0.0, "closed-form", 0.0)
    if p > -n:
        return AsaValue(p, math.inf, "sphere-form", math.inf, nodes_used=len(grid), divergent=True)
    return AsaValue(p, 0.0, "closed-form", 0.0, caveat=POLYTOPE_CAVEAT)


def asa_infinity(body: ConvexBody, grid: SphereGrid) -> AsaValue:
    """
    Endpoint value as_{+-inf}(K) = int h_K^{-n} dsigma = n|K°|.

    Examples
    --------
    >>> round(asa_infinity(Cube(2), grid_circle(4096)).value, 3)
    4.0
    """
    _check_grid(body, grid)
    n = body.dimension
    result = integrate(lambda U: body.support_values(U) ** (-n), grid)
    return _from_integral(math.inf, result, "sphere-form")


def asa_sphere_form(body: ConvexBody, p: float, grid: SphereGrid) -> AsaValue:
    """
    as_p(K) from the sphere form f_K^{n/(n+p)} h_K^{-n(p-1)/(n+p)}.

    Parameters
    ----------
    body : ConvexBody
        C^2_+ kind, or a polytope (handled by convention)
    p : float
        Exponent, may be +-inf, must not be -n
    grid : SphereGrid
        Quadrature grid of the body's dimension

    Returns
    -------
    AsaValue
        Polytopes give 0 for p > 0, a divergence flag for -n < p < 0 and
        0 with a caveat for p < -n

    Raises
    ------
    ExponentError
        If p is within 1e-6 of -n
    """
    _check_grid(body, grid)
    p = check_exponent(p, body.dimension)
    if math.isinf(p):
        return asa_infinity(body, grid)
    if body.polytope:
        return _polytope_value(body, p, grid)
    alpha, beta = sphere_exponents(p, body.dimension)
    result = integrate(
        lambda U: body.curvature_values(U) ** alpha * body.support_values(U) ** beta, grid
    )
    return _from_integral(p, result, "sphere-form")


def asa_boundary_form(body: ConvexBody, p: float, grid: SphereGrid) -> AsaValue:
    """
    as_p(K) as the boundary integral of kappa^{p/(n+p)} <x,N>^{-n(p-1)/(n+p)},
    pushed to the sphere with dmu_K = f_K dsigma.

    kappa and <x, N> come from the boundary geometry (gauss_curvature_at and
    boundary positions), not from the sphere-form primitives.
    """
    _check_grid(body, grid)
    if body.polytope:
        raise UnsupportedKindError(f"{body.describe()}: boundary form needs the inverse Gauss map")
    p = check_exponent(p, body.dimension)
    n = body.dimension

    if math.isinf(p):
        kappa_exp, normal_exp = 1.0, -float(n)
    else:
        kappa_exp, normal_exp = p / (n + p), -n * (p - 1.0) / (n + p)

    def integrand(U):
        x = body.boundary_positions(U)
        x_dot_n = np.einsum("ij,ij->i", x, U)
        kappa = body.gauss_curvatures(U)
        return kappa ** kappa_exp * x_dot_n ** normal_exp * body.curvature_values(U)

    return _from_integral(p, integrate(integrand, grid), "boundary-form")


def asa_minus_n(body: ConvexBody, grid: SphereGrid) -> AsaValue:
    """
    as_{-n}(K) = max over u of f_K(u)^{1/2} h_K(u)^{(n+1)/2}.

    The best grid node is refined by a bounded scalar search in angle
    (n = 2, tolerance 1e-10) or a Nelder-Mead search in spherical
    coordinates (n = 3). The error estimate is the gain of the refinement
    over the grid maximum.
    """
    _check_grid(body, grid)
    n = body.dimension
    if body.polytope:
        return AsaValue(-float(n), math.inf, "sup-form", math.inf,
                        nodes_used=len(grid), divergent=True)

    def sup_integrand(U):
        return body.curvature_values(U) ** 0.5 * body.support_values(U) ** ((n + 1) / 2.0)

    values = sup_integrand(grid.nodes)
    best = int(np.argmax(values))
    grid_max = float(values[best])
    refined = grid_max

    if n == 2:
        theta0 = float(np.arctan2(grid.nodes[best, 1], grid.nodes[best, 0]))
        cell = 2.0 * np.pi / max(len(grid), 8)

        def negative(theta):
            return -float(sup_integrand(np.array([[math.cos(theta), math.sin(theta)]]))[0])

        res = optimize.minimize_scalar(negative, bounds=(theta0 - cell, theta0 + cell),
                                       method="bounded", options={"xatol": SUP_XATOL})
        refined = max(grid_max, -float(res.fun))
    elif n == 3:
        x0 = grid.nodes[best]
        start = np.array([math.acos(np.clip(x0[2], -1.0, 1.0)), math.atan2(x0[1], x0[0])])

        def negative(angles):
            phi, theta = angles
            u = np.array([[math.sin(phi) * math.cos(theta), math.sin(phi) * math.sin(theta),
                           math.cos(phi)]])
            return -float(sup_integrand(u)[0])

        res = optimize.minimize(negative, start, method="Nelder-Mead",
                                options={"xatol": SUP_XATOL, "fatol": 1e-14})
        refined = max(grid_max, -float(res.fun))

    return AsaValue(-float(n), refined, "sup-form", abs(refined - grid_max), nodes_used=len(grid))


def f_p_exponents(p: float, n: int) -> Tuple[float, float]:
    """Exponents (a, b) of kappa^a <y, N>^b in the f_p weight."""
    if math.isinf(p):
        return 0.5, -(n - 1) / 2.0
    return (n * n + p) / (2.0 * (n + p)), -(n - 1) * (n * n + 2 * n + p) / (2.0 * (n + p))


def lp_weight(body: ConvexBody, p: float) -> Callable[[np.ndarray], np.ndarray]:
    """
    Vectorised f_p weight, as a function of outer normals.

    With this weight the surface-body limit equals as_p(K).
    """
    if body.polytope:
        raise UnsupportedKindError(f"{body.describe()}: f_p weight needs the inverse Gauss map")
    p = check_exponent(p, body.dimension)
    a, b = f_p_exponents(p, body.dimension)

    def weight(U: np.ndarray) -> np.ndarray:
        kappa = 1.0 / body.curvature_values(U)
        return kappa ** a * body.support_values(U) ** b

    return weight


def f_p_weight(body: ConvexBody, p: float, u) -> float:
    """
    f_p(y) = kappa_K(y)^{(n^2+p)/(2(n+p))} <y, N_K(y)>^{-(n-1)(n^2+2n+p)/(2(n+p))}
    at y = N_K^{-1}(u).
    """
    U = _unit_rows(u, body.dimension)
    return float(lp_weight(body, p)(U)[0])


def asa_closed_form(body: ConvexBody, p: float) -> float:
    """
    Closed-form as_p for ellipsoids, cubes and cross-polytopes.

    Ellipsoids: |det T|^{(n-p)/(n+p)} n|B_2^n|; polytope kinds follow the
    polytope convention (n|K| at p = 0, 0 for p > 0, n|K°| at infinity).
    """
    n = body.dimension
    p = check_exponent(p, n)
    if isinstance(body, Ellipsoid):
        det_t = float(np.prod(body.semi_axes))
        exponent = -1.0 if math.isinf(p) else (n - p) / (n + p)
        return det_t ** exponent * n * ball_volume(n)
    if isinstance(body, (Cube, CrossPolytope)):
        polar_volume = {Cube: 2.0 ** n / math.factorial(n), CrossPolytope: 2.0 ** n}[type(body)]
        if math.isinf(p):
            return n * polar_volume
        if p == 0.0:
            return n * body.closed_volume()
        if p > 0.0:
            return 0.0
        if p > -n:
            return math.inf
        return 0.0
    raise UnsupportedKindError(f"No closed form of as_p for {body.describe()}")


class AsaCalculator:
    """
    Cached as_p evaluation for one (body, grid) pair.

    Support and curvature samples are computed once per node set (the grid
    and its error-estimate companion), so scanning many exponents costs one
    pass of body evaluations.

    Examples
    --------
    >>> calc = AsaCalculator(unit_ball(2), grid_circle(4096))
    >>> round(calc.value(1.0), 12)
    6.283185307180
    """

    def __init__(self, body: ConvexBody, grid: SphereGrid):
        _check_grid(body, grid)
        self.body = body
        self.grid = grid
        self._samples: Dict[int, tuple] = {}
        self._values: Dict[float, AsaValue] = {}

    def _h_f(self, U: np.ndarray):
        # Keyed by node count: one entry for the grid, one for its coarse companion.
        key = len(U)
        cached = self._samples.get(key)
        if cached is None or not (cached[0] is U or np.array_equal(cached[0], U)):
            h = self.body.support_values(U)
            f = None if self.body.polytope else self.body.curvature_values(U)
            cached = (U, h, f)
            self._samples[key] = cached
        return cached[1], cached[2]

    def get(self, p: float) -> AsaValue:
        """as_p(K) by the sphere form (sup-form at p = -n)."""
        n = self.body.dimension
        p = float(p)
        if p in self._values:
            return self._values[p]
        if math.isfinite(p) and abs(n + p) < POLE_TOL:
            value = asa_minus_n(self.body, self.grid)
        elif self.body.polytope and not math.isinf(p):
            value = _polytope_value(self.body, check_exponent(p, n), self.grid)
        else:
            alpha, beta = sphere_exponents(p, n)

            def integrand(U):
                h, f = self._h_f(U)
                if alpha == 0.0:
                    return h ** beta
                return f ** alpha * h ** beta

            method = "sphere-form"
            value = _from_integral(p, integrate(integrand, self.grid), method)
        self._values[p] = value
        return value

    def value(self, p: float) -> float:
        return self.get(p).value
