"""
Seeded ensembles of smooth planar bodies
"""
import warnings
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from ..bodies.convex import PlanarSupport, recenter
from ..exceptions import ConfigurationError, DegradedAccuracyWarning, GeometryError

MAX_RETRIES = 3


def _coefficients(rng: np.random.Generator, harmonic_budget: int, scale: float,
                  symmetric: bool):
    k = np.arange(harmonic_budget + 1, dtype=float)
    bound = np.zeros_like(k)
    bound[2:] = scale / k[2:] ** 3
    if symmetric:
        bound[1::2] = 0.0
    a = rng.uniform(-1.0, 1.0, size=len(k)) * bound
    b = rng.uniform(-1.0, 1.0, size=len(k)) * bound
    a[0] = 1.0
    b[0] = 0.0
    return a, b


def random_smooth_body(seed: int, harmonic_budget: int = 8, perturbation_scale: float = 0.2,
                       symmetric: bool = False) -> PlanarSupport:
    """
    Random C^2_+ planar body h = 1 + sum_{k=2}^{budget} a_k cos(k t) + b_k sin(k t).

    Coefficients are uniform in [-scale/k^3, scale/k^3] from a numpy
    Generator seeded by ``seed``; the body is then translated so its
    centroid is at the origin. A body failing the convexity check is
    redrawn with half the scale, at most 3 times.

    Parameters
    ----------
    seed : int
        Generator seed; equal seeds give identical bodies
    harmonic_budget : int
        Highest harmonic, at least 2
    perturbation_scale : float
        Coefficient scale in [0, 0.3); 0 gives the unit disc
    symmetric : bool
        Keep even harmonics only (origin-symmetric bodies)

    Returns
    -------
    PlanarSupport

    Raises
    ------
    GeometryError
        If every retry fails the convexity check
    """
    if int(harmonic_budget) != harmonic_budget or harmonic_budget < 2:
        raise ConfigurationError(f"harmonic_budget must be an integer >= 2 (got {harmonic_budget})")
    if not 0.0 <= perturbation_scale < 0.3:
        raise ConfigurationError(f"perturbation_scale must lie in [0, 0.3) (got {perturbation_scale})")

    rng = np.random.default_rng(seed)
    scale = float(perturbation_scale)
    for attempt in range(MAX_RETRIES + 1):
        a, b = _coefficients(rng, int(harmonic_budget), scale, symmetric)
        try:
            body = PlanarSupport(2, cos_coeffs=a, sin_coeffs=b, provenance=f"random-smooth(seed={seed})")
        except GeometryError:
            if attempt == MAX_RETRIES:
                break
            scale *= 0.5
            warnings.warn(
                f"Random body (seed={seed}) failed the convexity check; redrawing with scale {scale:g}",
                DegradedAccuracyWarning,
            )
            continue
        return body if symmetric else recenter(body)
    raise GeometryError(f"Random body (seed={seed}) failed the convexity check {MAX_RETRIES + 1} times")


@dataclass(frozen=True)
class BodyEnsemble:
    """
    Seeded family of random smooth bodies.

    Body i is drawn with the i-th seed of ``numpy.random.SeedSequence(seed)``.
    """
    seed: int
    count: int
    harmonic_budget: int = 8
    perturbation_scale: float = 0.2
    symmetric: bool = False

    def __post_init__(self):
        if self.count < 1:
            raise ConfigurationError("Ensemble count must be positive")
        if not 0.0 < self.perturbation_scale < 0.3:
            raise ConfigurationError("Ensemble perturbation_scale must lie in (0, 0.3)")
        if self.harmonic_budget < 2:
            raise ConfigurationError("Ensemble harmonic_budget must be at least 2")

    def seeds(self) -> np.ndarray:
        return np.random.SeedSequence(self.seed).generate_state(self.count)

    def __len__(self) -> int:
        return self.count

    def __iter__(self) -> Iterator[PlanarSupport]:
        for child in self.seeds():
            yield random_smooth_body(int(child), self.harmonic_budget,
                                     self.perturbation_scale, self.symmetric)
