"""
lp_affine: numerical L_p affine surface areas, floating bodies and their inequalities

This package evaluates L_p affine surface areas of convex bodies for every
real p (and +-inf), builds floating and surface bodies of planar bodies to
observe the limits of their polar volumes, and checks the L_p affine
isoperimetric family of inequalities over deterministic and random bodies.
"""

__version__ = "0.1.1"
__author__ = "lp_affine developers"

from .bodies import (
    load_body,
    polar_body,
    volume,
    unit_ball,
)

from .asa import (
    AsaCalculator,
    asa_sphere_form,
    asa_boundary_form,
    asa_minus_n,
)

from .floating import (
    floating_body,
    surface_body,
    floating_limit,
    surface_limit,
)

from .inequalities import (
    run_suite,
    duality_check,
)

__all__ = [
    # Bodies
    "load_body",
    "polar_body",
    "volume",
    "unit_ball",
    # Affine surface areas
    "AsaCalculator",
    "asa_sphere_form",
    "asa_boundary_form",
    "asa_minus_n",
    # Floating and surface bodies
    "floating_body",
    "surface_body",
    "floating_limit",
    "surface_limit",
    # Inequalities
    "run_suite",
    "duality_check",
]
