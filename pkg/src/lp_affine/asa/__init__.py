"""
L_p affine surface area kernels
"""
from .functionals import (
    AsaValue,
    AsaCalculator,
    check_exponent,
    asa_sphere_form,
    asa_boundary_form,
    asa_infinity,
    asa_minus_n,
    asa_closed_form,
    f_p_weight,
    lp_weight,
)

__all__ = [
    "AsaValue",
    "AsaCalculator",
    "check_exponent",
    "asa_sphere_form",
    "asa_boundary_form",
    "asa_infinity",
    "asa_minus_n",
    "asa_closed_form",
    "f_p_weight",
    "lp_weight",
]
