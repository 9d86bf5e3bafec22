"""
Floating bodies, surface bodies and their polar-volume limits
"""
from .caps import (
    CapCut,
    InnerBodyApprox,
    cap_volume_offset,
    cap_volume_offsets,
    surface_cap_offset,
    surface_cap_offsets,
    floating_body,
    surface_body,
    polar_volume_deficit,
    constant_weight,
    total_weighted_length,
)
from .limits import (
    LimitEstimate,
    CubeBound,
    extrapolate_limit,
    floating_limit,
    surface_limit,
    surface_target,
    cube_counterexample,
    cube_limit_estimate,
    floating_constant,
    surface_constant,
)

__all__ = [
    "CapCut",
    "InnerBodyApprox",
    "cap_volume_offset",
    "cap_volume_offsets",
    "surface_cap_offset",
    "surface_cap_offsets",
    "floating_body",
    "surface_body",
    "polar_volume_deficit",
    "constant_weight",
    "total_weighted_length",
    "LimitEstimate",
    "CubeBound",
    "extrapolate_limit",
    "floating_limit",
    "surface_limit",
    "surface_target",
    "cube_counterexample",
    "cube_limit_estimate",
    "floating_constant",
    "surface_constant",
]
