"""
Quadrature on the unit sphere S^{n-1}

Three regimes are supported: the uniform trapezoid rule on the circle,
a Gauss-Legendre x uniform product rule on S^2, and seeded Monte Carlo for
n >= 4. A fourth, arc-adapted rule places Gauss-Legendre nodes on each
normal-angle span of a piecewise circular body, whose curvature function
jumps between arcs.
"""
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from scipy import special

from ..exceptions import ConfigurationError

SCHEMES = ("circle-uniform", "sphere3-product", "mc", "arc-gauss")

MIN_CIRCLE_NODES = 8
MIN_MC_NODES = 1000


def sphere_area(n: int) -> float:
    """Surface area |S^{n-1}| = n |B_2^n| = 2 pi^{n/2} / Gamma(n/2)."""
    return float(2.0 * np.pi ** (n / 2.0) / special.gamma(n / 2.0))


def ball_volume(n: int) -> float:
    """Volume |B_2^n| of the Euclidean unit ball (|B_2^1| = 2)."""
    return float(np.pi ** (n / 2.0) / special.gamma(n / 2.0 + 1.0))


@dataclass(frozen=True, eq=False)
class SphereGrid:
    """
    Quadrature nodes and weights on S^{n-1}.

    Attributes
    ----------
    dimension : int
        Ambient dimension n
    nodes : numpy.ndarray
        Unit vectors, shape (m, n)
    weights : numpy.ndarray
        Positive weights, shape (m,), summing to |S^{n-1}|
    scheme : str
        One of SCHEMES
    resolution : int
        Resolution parameter the grid was built from
    seed : int, optional
        Generator seed (mc only)
    angles : numpy.ndarray, optional
        Node angles for planar grids
    """
    dimension: int
    nodes: np.ndarray
    weights: np.ndarray
    scheme: str
    resolution: int
    seed: Optional[int] = None
    angles: Optional[np.ndarray] = None
    shape: Optional[tuple] = None
    breakpoints: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ConfigurationError(f"Unknown grid scheme: {self.scheme}")
        if self.nodes.shape != (len(self.weights), self.dimension):
            raise ConfigurationError("Grid nodes and weights disagree in shape")

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def label(self) -> str:
        """Scheme and resolution as used on the command line."""
        if self.scheme == "sphere3-product" and self.shape is not None:
            return f"sphere3:{self.shape[0]}x{self.shape[1]}"
        return f"{self.scheme.split('-')[0]}:{self.resolution}"


@dataclass(frozen=True)
class IntegralResult:
    """
    Value of a sphere integral with its error estimate.

    error_estimate is |value(resolution) - value(resolution/2)| for the
    deterministic rules and the sample standard error for Monte Carlo.
    A non-finite integrand value on any node sets ``divergent`` and
    ``value`` to +inf.
    """
    value: float
    error_estimate: float
    nodes_used: int
    divergent: bool = False


def grid_circle(N: int) -> SphereGrid:
    """
    Uniform trapezoid grid on S^1.

    Parameters
    ----------
    N : int
        Number of equally spaced angles, at least 8

    Returns
    -------
    SphereGrid
        Nodes at angles 2 pi k / N with weights 2 pi / N
    """
    if int(N) != N or N < MIN_CIRCLE_NODES:
        raise ConfigurationError(f"Circle grid needs N >= {MIN_CIRCLE_NODES}, got {N}")
    N = int(N)
    angles = 2.0 * np.pi * np.arange(N) / N
    nodes = np.column_stack([np.cos(angles), np.sin(angles)])
    weights = np.full(N, 2.0 * np.pi / N)
    return SphereGrid(2, nodes, weights, "circle-uniform", N, angles=angles)


def _sphere3(n_theta: int, n_phi: int) -> SphereGrid:
    z, wz = special.roots_legendre(n_phi)
    theta = 2.0 * np.pi * np.arange(n_theta) / n_theta
    zz, tt = np.meshgrid(z, theta, indexing="ij")
    rr = np.sqrt(1.0 - zz ** 2)
    nodes = np.column_stack([(rr * np.cos(tt)).ravel(),
                             (rr * np.sin(tt)).ravel(),
                             zz.ravel()])
    weights = np.outer(wz, np.full(n_theta, 2.0 * np.pi / n_theta)).ravel()
    return SphereGrid(3, nodes, weights, "sphere3-product", n_theta * n_phi,
                      shape=(n_theta, n_phi))


def grid_sphere3(n_theta: int, n_phi: int) -> SphereGrid:
    """
    Product grid on S^2: Gauss-Legendre in cos(phi), uniform in azimuth.

    Parameters
    ----------
    n_theta : int
        Azimuthal node count, at least 8
    n_phi : int
        Gauss-Legendre node count in the polar variable, at least 4

    Returns
    -------
    SphereGrid
        n_theta * n_phi nodes, weights summing to 4 pi
    """
    if n_theta < 8 or n_phi < 4:
        raise ConfigurationError(
            f"Product grid needs n_theta >= 8 and n_phi >= 4, got {n_theta}x{n_phi}"
        )
    return _sphere3(int(n_theta), int(n_phi))


def grid_mc(n: int, N: int, seed: int) -> SphereGrid:
    """
    Monte Carlo grid from normalised standard Gaussian vectors.

    Parameters
    ----------
    n : int
        Dimension, at least 2
    N : int
        Sample count, at least 1000
    seed : int
        Seed of the numpy Generator; equal seeds give identical grids

    Returns
    -------
    SphereGrid
        Equal weights |S^{n-1}| / N
    """
    if n < 2 or N < MIN_MC_NODES:
        raise ConfigurationError(f"Monte Carlo grid needs n >= 2 and N >= {MIN_MC_NODES}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((int(N), int(n)))
    nodes = g / np.linalg.norm(g, axis=1, keepdims=True)
    weights = np.full(int(N), sphere_area(n) / N)
    return SphereGrid(int(n), nodes, weights, "mc", int(N), seed=int(seed))


def grid_arcs(breakpoints: Sequence[float], nodes_per_arc: int = 64) -> SphereGrid:
    """
    Gauss-Legendre nodes on each span between consecutive breakpoint angles.

    Parameters
    ----------
    breakpoints : sequence of float
        Increasing normal angles covering one turn (the last span wraps to
        the first breakpoint + 2 pi)
    nodes_per_arc : int
        Nodes per span, at least 4

    Returns
    -------
    SphereGrid
        Planar grid whose weights sum to 2 pi
    """
    breaks = np.asarray(breakpoints, dtype=float)
    if breaks.ndim != 1 or len(breaks) < 1 or nodes_per_arc < 4:
        raise ConfigurationError("Arc grid needs at least one breakpoint and 4 nodes per arc")
    if np.any(np.diff(breaks) <= 0) or breaks[-1] - breaks[0] >= 2.0 * np.pi:
        raise ConfigurationError("Arc breakpoints must increase within one turn")
    angles, weights = _arc_nodes(breaks, int(nodes_per_arc))
    nodes = np.column_stack([np.cos(angles), np.sin(angles)])
    return SphereGrid(2, nodes, weights, "arc-gauss", int(nodes_per_arc),
                      angles=angles, breakpoints=breaks)


def _arc_nodes(breaks: np.ndarray, m: int):
    x, w = special.roots_legendre(m)
    ends = np.append(breaks[1:], breaks[0] + 2.0 * np.pi)
    half = 0.5 * (ends - breaks)
    mid = 0.5 * (ends + breaks)
    angles = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return angles, weights


def _coarse(grid: SphereGrid):
    """Half-resolution companion grid, or node indices into ``grid``."""
    if grid.scheme == "circle-uniform":
        if grid.resolution % 2 == 0:
            return np.arange(0, grid.resolution, 2)
        half = grid.resolution // 2
        angles = 2.0 * np.pi * np.arange(half) / half
        nodes = np.column_stack([np.cos(angles), np.sin(angles)])
        return SphereGrid(2, nodes, np.full(half, 2.0 * np.pi / half),
                          "circle-uniform", half, angles=angles)
    if grid.scheme == "sphere3-product":
        n_theta, n_phi = grid.shape
        return _sphere3(max(n_theta // 2, 2), max(n_phi // 2, 1))
    if grid.scheme == "arc-gauss":
        angles, weights = _arc_nodes(grid.breakpoints, max(grid.resolution // 2, 1))
        nodes = np.column_stack([np.cos(angles), np.sin(angles)])
        return SphereGrid(2, nodes, weights, "arc-gauss", max(grid.resolution // 2, 1),
                          angles=angles, breakpoints=grid.breakpoints)
    return None


def _weighted_sum(weights: np.ndarray, values: np.ndarray) -> float:
    # fsum is exactly rounded, so the fixed node order gives bit-identical results
    return math.fsum((weights * values).tolist())


def integrate(f: Callable[[np.ndarray], np.ndarray], grid: SphereGrid) -> IntegralResult:
    """
    Integrate a vectorised function of directions over the sphere.

    Parameters
    ----------
    f : callable
        Maps an (m, n) array of unit vectors to an (m,) array of values
    grid : SphereGrid
        Quadrature grid

    Returns
    -------
    IntegralResult
        Compensated weighted sum with the grid's error estimate

    Examples
    --------
    >>> integrate(lambda u: np.ones(len(u)), grid_circle(1024)).value
    6.283185307179586
    """
    values = np.asarray(f(grid.nodes), dtype=float)
    if values.shape != (len(grid),):
        raise ConfigurationError("Integrand must return one value per grid node")
    if not np.all(np.isfinite(values)):
        return IntegralResult(np.inf, np.inf, len(grid), divergent=True)

    value = _weighted_sum(grid.weights, values)

    if grid.scheme == "mc":
        area = float(np.sum(grid.weights))
        error = area * float(np.std(values, ddof=1)) / math.sqrt(len(grid))
        return IntegralResult(value, error, len(grid))

    coarse = _coarse(grid)
    if isinstance(coarse, np.ndarray):
        coarse_value = _weighted_sum(2.0 * grid.weights[coarse], values[coarse])
    else:
        coarse_values = np.asarray(f(coarse.nodes), dtype=float)
        if not np.all(np.isfinite(coarse_values)):
            return IntegralResult(value, np.inf, len(grid))
        coarse_value = _weighted_sum(coarse.weights, coarse_values)
    return IntegralResult(value, abs(value - coarse_value), len(grid))
