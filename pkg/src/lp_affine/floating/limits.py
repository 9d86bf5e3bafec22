"""
Limits of normalised polar-volume deficits

Floating bodies:  c_n (|K_delta°| - |K°|) / delta^{2/(n+1)}  ->  as_{-n/(n+2)}(K°)
Surface bodies:   beta_n (|K_{f,s}°| - |K°|) / s^{2/(n-1)}
                  ->  int dsigma / (h^{n+1} f_K^{1/(n-1)} f(N^{-1}(u))^{2/(n-1)})

with c_n = 2 (|B_2^{n-1}| / (n+1))^{2/(n+1)} and beta_n = 2 |B_2^{n-1}|^{2/(n-1)}.
"""
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np
import pandas as pd
from scipy import optimize
from tqdm import tqdm

from ..asa import asa_sphere_form
from ..bodies.convex import ConvexBody, polar_body
from ..exceptions import PreconditionError
from ..quadrature import SphereGrid, ball_volume, integrate
from ..utils.numerics import log_log_slope
from .caps import Weight, floating_body, polar_volume_deficit, surface_body, total_weighted_length

GAMMA_MAX = 64.0

LIMIT_COLUMNS = [
    "parameter",
    "ratio",
    "extrapolated",
    "fitted_exponent",
    "correction_exponent",
    "target",
    "relative_gap",
    "cross_check_target",
    "target_error",
    "grid",
    "direction_count",
]


def floating_constant(n: int) -> float:
    """c_n = 2 (|B_2^{n-1}| / (n+1))^{2/(n+1)}; c_2 = 2 (2/3)^{2/3}."""
    return 2.0 * (ball_volume(n - 1) / (n + 1)) ** (2.0 / (n + 1))


def surface_constant(n: int) -> float:
    """beta_n = 2 |B_2^{n-1}|^{2/(n-1)}; beta_2 = 8."""
    return 2.0 * ball_volume(n - 1) ** (2.0 / (n - 1))


@dataclass
class LimitEstimate:
    """
    Ratios along a parameter schedule and their extrapolated limit.

    Attributes
    ----------
    parameters, ratios : numpy.ndarray
        Samples, parameters strictly decreasing
    extrapolated : float
        Limit from extrapolate_limit
    fitted_exponent : float
        Least-squares log-log slope of ratio against parameter; near 0 when
        the ratio converges, negative when it diverges
    correction_exponent : float
        Fitted order gamma of the correction term (nan when the
        extrapolation fell back to the finest ratio)
    target : float, optional
        Value the limit should equal, None when no finite limit exists
    cross_check_target : float, optional
        Second, independently computed target
    """
    parameters: np.ndarray
    ratios: np.ndarray
    extrapolated: float
    fitted_exponent: float
    correction_exponent: float = math.nan
    target: Optional[float] = None
    cross_check_target: Optional[float] = None
    target_error: Optional[float] = None
    grid_label: str = ""
    direction_count: int = 0
    notes: list = field(default_factory=list)

    @property
    def relative_gap(self) -> Optional[float]:
        if self.target is None or self.target == 0.0:
            return None
        return abs(self.extrapolated - self.target) / abs(self.target)

    @property
    def cross_check_gap(self) -> Optional[float]:
        if self.cross_check_target is None:
            return None
        return abs(self.extrapolated - self.cross_check_target) / abs(self.cross_check_target)

    def to_frame(self) -> pd.DataFrame:
        """One row per sample, limit columns repeated."""
        rows = []
        for parameter, ratio in zip(self.parameters, self.ratios):
            rows.append({
                "parameter": float(parameter),
                "ratio": float(ratio),
                "extrapolated": self.extrapolated,
                "fitted_exponent": self.fitted_exponent,
                "correction_exponent": self.correction_exponent,
                "target": self.target,
                "relative_gap": self.relative_gap,
                "cross_check_target": self.cross_check_target,
                "target_error": self.target_error,
                "grid": self.grid_label,
                "direction_count": self.direction_count,
            })
        return pd.DataFrame(rows, columns=LIMIT_COLUMNS)


def extrapolate_limit(parameters: Sequence[float], ratios: Sequence[float]):
    """
    Extrapolate ratios r(t) to t -> 0.

    Assumes r(t) = r_inf + C t^gamma on the three finest samples
    t_1 > t_2 > t_3. With a = log(t_1 / t_2) and b = log(t_2 / t_3), gamma
    solves (r_1 - r_2) / (r_2 - r_3) = e^{gamma b} (e^{gamma a} - 1) / (e^{gamma b} - 1),
    which reduces to q^gamma on a geometric schedule t_2 / t_3 = t_1 / t_2 = q.
    Then r_inf = r_3 - (r_2 - r_3) / (e^{gamma b} - 1). When the two
    differences disagree in sign, vanish, or give gamma <= 0 the finest
    ratio is returned with gamma = nan.

    Returns
    -------
    tuple
        (extrapolated, fitted_exponent, correction_exponent)
    """
    t = np.asarray(parameters, dtype=float)
    r = np.asarray(ratios, dtype=float)
    if len(t) < 3 or len(t) != len(r):
        raise PreconditionError("Extrapolation needs at least three (parameter, ratio) samples")
    if np.any(t[-3:] <= 0.0) or np.any(np.diff(t[-3:]) >= 0.0):
        raise PreconditionError("Extrapolation needs positive, strictly decreasing parameters")
    fitted = log_log_slope(t, r)

    r1, r2, r3 = r[-3:]
    d1, d2 = r1 - r2, r2 - r3
    if d1 == 0.0 or d2 == 0.0 or np.sign(d1) != np.sign(d2):
        return float(r3), fitted, math.nan
    a = math.log(t[-3] / t[-2])
    b = math.log(t[-2] / t[-1])
    target = d1 / d2

    def spacing_ratio(gamma):
        return math.exp(gamma * b) * math.expm1(gamma * a) / math.expm1(gamma * b)

    # spacing_ratio increases from a / b at gamma -> 0
    if target <= a / b or spacing_ratio(1e-12) >= target:
        return float(r3), fitted, math.nan
    upper = 1.0
    while spacing_ratio(upper) < target:
        upper *= 2.0
        if upper > GAMMA_MAX or upper * max(a, b) > 700.0:
            return float(r3), fitted, math.nan
    gamma = optimize.brentq(lambda g: spacing_ratio(g) - target, 1e-12, upper, xtol=1e-14, rtol=1e-13)
    return float(r3 - d2 / math.expm1(gamma * b)), fitted, gamma


def _check_schedule(schedule: Sequence[float]) -> np.ndarray:
    s = np.asarray(schedule, dtype=float)
    if len(s) < 4:
        raise PreconditionError("Limit schedules need at least 4 values")
    if np.any(s <= 0.0) or np.any(np.diff(s) >= 0.0):
        raise PreconditionError("Limit schedules must be positive and strictly decreasing")
    return s


def floating_limit(body: ConvexBody, delta_schedule: Sequence[float], Ndirs: int,
                   grid: SphereGrid, progress: bool = False) -> LimitEstimate:
    """
    Estimate lim c_n (|K_delta°| - |K°|) / delta^{2/(n+1)}.

    Parameters
    ----------
    body : ConvexBody
        Planar body (polygons allowed; their ratio diverges)
    delta_schedule : sequence of float
        Strictly decreasing, at least 4 values
    Ndirs : int
        Cut directions per floating body
    grid : SphereGrid
        Grid for the as_p targets
    progress : bool
        Show a tqdm bar over the schedule

    Returns
    -------
    LimitEstimate
        Target as_{-n/(n+2)}(K°), cross-checked by as_{-n(n+2)}(K); both
        None for polytopes
    """
    deltas = _check_schedule(delta_schedule)
    n = body.dimension
    c_n = floating_constant(n)
    ratios = []
    for delta in tqdm(deltas, desc="floating bodies", disable=not progress):
        inner = floating_body(body, float(delta), Ndirs)
        deficit = polar_volume_deficit(body, inner, reference="matched")
        ratios.append(c_n * deficit / delta ** (2.0 / (n + 1)))
    ratios = np.array(ratios)
    extrapolated, fitted, gamma = extrapolate_limit(deltas, ratios)

    estimate = LimitEstimate(deltas, ratios, extrapolated, fitted, gamma,
                             grid_label=grid.label, direction_count=Ndirs)
    if body.polytope:
        estimate.notes.append("polytope: no finite limit, ratio diverges")
        return estimate

    target = asa_sphere_form(polar_body(body), -n / (n + 2.0), grid)
    cross = asa_sphere_form(body, -float(n * (n + 2)), grid)
    estimate.target = target.value
    estimate.cross_check_target = cross.value
    estimate.target_error = target.error_estimate + cross.error_estimate
    return estimate


def surface_target(body: ConvexBody, weight: Weight, grid: SphereGrid):
    """int dsigma / (h^{n+1} f_K^{1/(n-1)} f^{2/(n-1)}) as an IntegralResult."""
    n = body.dimension
    return integrate(
        lambda U: 1.0 / (body.support_values(U) ** (n + 1)
                         * body.curvature_values(U) ** (1.0 / (n - 1))
                         * weight(U) ** (2.0 / (n - 1))),
        grid,
    )


def surface_limit(body: ConvexBody, weight: Weight, s_schedule: Sequence[float], Ndirs: int,
                  grid: SphereGrid, progress: bool = False) -> LimitEstimate:
    """
    Estimate lim beta_n (|K_{f,s}°| - |K°|) / s^{2/(n-1)}.

    The weight must be bounded below by a positive constant
    (PreconditionError otherwise). With weight = lp_weight(body, p) the
    target equals as_p(K).
    """
    s_values = _check_schedule(s_schedule)
    total_weighted_length(body, weight)
    n = body.dimension
    beta_n = surface_constant(n)
    ratios = []
    for s in tqdm(s_values, desc="surface bodies", disable=not progress):
        inner = surface_body(body, weight, float(s), Ndirs)
        deficit = polar_volume_deficit(body, inner, reference="matched")
        ratios.append(beta_n * deficit / s ** (2.0 / (n - 1)))
    ratios = np.array(ratios)
    extrapolated, fitted, gamma = extrapolate_limit(s_values, ratios)

    estimate = LimitEstimate(s_values, ratios, extrapolated, fitted, gamma,
                             grid_label=grid.label, direction_count=Ndirs)
    if body.polytope:
        estimate.notes.append("polytope: no finite limit")
        return estimate
    target = surface_target(body, weight, grid)
    estimate.target = target.value
    estimate.target_error = target.error_estimate
    return estimate


class CubeBound(NamedTuple):
    """Closed-form lower bound for the cube's normalised deficit."""
    deficit_lower_bound: float
    ratio: float


def cube_counterexample(n: int, delta: float) -> CubeBound:
    """
    Corner-cut bound for B_inf^n.

    Cutting one corner of volume delta gives the body K_1 with
    |K_1°| = (2^n/n!) n / (n - (n! delta)^{1/n}). Since K_delta ⊆ K_1, the
    deficit |K_1°| - |K°| bounds the floating-body deficit from below, and
    the ratio deficit / delta^{2/(n+1)} grows like delta^{1/n - 2/(n+1)}.

    Examples
    --------
    >>> round(cube_counterexample(2, 0.125).ratio, 6)
    2.666667
    """
    if n < 2:
        raise PreconditionError("Cube counterexample needs n >= 2")
    if delta <= 0.0:
        raise PreconditionError(f"delta must be positive (got {delta})")
    corner = (math.factorial(n) * delta) ** (1.0 / n)
    if corner >= n:
        raise PreconditionError(f"delta = {delta} too large: (n! delta)^(1/n) must be < n")
    base = 2.0 ** n / math.factorial(n)
    deficit = base * n / (n - corner) - base
    return CubeBound(deficit, deficit / delta ** (2.0 / (n + 1)))


def cube_limit_estimate(n: int, deltas: Sequence[float]) -> LimitEstimate:
    """Closed-form cube ratios along a schedule, with their log-log slope."""
    deltas = _check_schedule(deltas)
    ratios = np.array([cube_counterexample(n, float(d)).ratio for d in deltas])
    extrapolated, fitted, gamma = extrapolate_limit(deltas, ratios)
    estimate = LimitEstimate(deltas, ratios, extrapolated, fitted, gamma, grid_label="closed-form")
    estimate.notes.append(f"expected exponent {1.0 / n - 2.0 / (n + 1):.6f}")
    return estimate
