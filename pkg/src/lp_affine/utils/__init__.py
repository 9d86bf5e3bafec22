"""
Utilities package
"""
from .config import (
    load_config,
    get_grid_defaults,
    get_schedule,
    geometric_schedule,
    get_tolerance_policy,
    get_ensemble_defaults,
    get_suite_matrix,
)
from .export import write_table

__all__ = [
    "load_config",
    "get_grid_defaults",
    "get_schedule",
    "geometric_schedule",
    "get_tolerance_policy",
    "get_ensemble_defaults",
    "get_suite_matrix",
    "write_table",
]
