"""
Inequality harness: checks, seeded body ensembles and the suite runner
"""
from .checks import (
    InequalityReport,
    CheckContext,
    VERDICTS,
    verdict_for,
    holder_case,
    holder_condition,
    holder_triple_check,
    monotonicity_check,
    polar_volume_product_bounds,
    isoperimetric_check,
    santalo_product_check,
    santalo_sanity_check,
    dual_exponent,
    duality_check,
    minus_n_checks,
    rounded_bound,
    rounded_body_bounds,
)
from .ensemble import BodyEnsemble, random_smooth_body
from .suite import DEFAULT_MATRIX, check_body, deterministic_bodies, run_suite, summarize

__all__ = [
    "InequalityReport",
    "CheckContext",
    "VERDICTS",
    "verdict_for",
    "holder_case",
    "holder_condition",
    "holder_triple_check",
    "monotonicity_check",
    "polar_volume_product_bounds",
    "isoperimetric_check",
    "santalo_product_check",
    "santalo_sanity_check",
    "dual_exponent",
    "duality_check",
    "minus_n_checks",
    "rounded_bound",
    "rounded_body_bounds",
    "BodyEnsemble",
    "random_smooth_body",
    "DEFAULT_MATRIX",
    "check_body",
    "deterministic_bodies",
    "run_suite",
    "summarize",
]
