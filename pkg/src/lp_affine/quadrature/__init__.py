"""
Quadrature package: integration over the unit sphere
"""
from .sphere import (
    SphereGrid,
    IntegralResult,
    grid_circle,
    grid_sphere3,
    grid_mc,
    grid_arcs,
    integrate,
    sphere_area,
    ball_volume,
)

__all__ = [
    "SphereGrid",
    "IntegralResult",
    "grid_circle",
    "grid_sphere3",
    "grid_mc",
    "grid_arcs",
    "integrate",
    "sphere_area",
    "ball_volume",
]
