"""
Full inequality check matrix over deterministic bodies and a seeded ensemble
"""
from typing import Any, Dict, Iterable, List, Optional, Sequence

import numpy as np
import pandas as pd
from tqdm import tqdm

from ..bodies.convex import ConvexBody, Ellipsoid, unit_ball
from ..exceptions import ConfigurationError
from ..quadrature import SphereGrid
from .checks import (
    DEFAULT_SANTALO_C,
    REPORT_COLUMNS,
    CheckContext,
    InequalityReport,
    duality_check,
    holder_triple_check,
    isoperimetric_check,
    minus_n_checks,
    monotonicity_check,
    polar_volume_product_bounds,
    santalo_product_check,
    santalo_sanity_check,
)
from .ensemble import BodyEnsemble

SUITE_COLUMNS = ["body_index"] + REPORT_COLUMNS

DEFAULT_MATRIX = {
    "holder_triples": [
        [1.0, 0.0, 2.0], [1.0, -3.0, -1.0], [-5.0, 1.0, -3.0], [-5.0, -3.0, -8.0],
        [-5.0, -8.0, -3.0], [-8.0, -4.0, 1.0], [1.0, -1.0, -4.0], [1.0, 3.0, -1.0],
    ],
    "monotone_pairs": [[1.0, 2.0], [-1.0, -0.5], [-6.0, -4.0]],
    "isoperimetric_p": [0.0, 0.5, 1.0, 2.0, -0.5, -1.0, -8.0],
    "santalo_p": [0.0, 1.0, 2.0, -0.5, -1.0, -2.0, -8.0],
    "duality_p": [2.0],
    "minus_n_pairs": [[0.0, 2.0], [1.0, -1.0], [-4.0, 1.0]],
    "bound_t": [1.0, -1.0, -4.0],
}


def deterministic_bodies() -> List[ConvexBody]:
    """Unit disc and the ellipses (2, 1) and (1.5, 1), the equality bodies."""
    return [
        unit_ball(2),
        Ellipsoid(2, semi_axes=np.array([2.0, 1.0]), provenance="ellipse(2,1)"),
        Ellipsoid(2, semi_axes=np.array([1.5, 1.0]), provenance="ellipse(1.5,1)"),
    ]


def check_body(body: ConvexBody, grid: SphereGrid, matrix: Optional[Dict[str, Any]] = None,
               santalo_c: float = DEFAULT_SANTALO_C,
               policy: Optional[Dict[str, float]] = None) -> List[InequalityReport]:
    """
    Run every check of the matrix on one body, in matrix order.

    Parameters
    ----------
    body : ConvexBody
        C^2_+ body (the matrix contains exponents below -n)
    grid : SphereGrid
        Quadrature grid of the body's dimension
    matrix : dict, optional
        Exponent lists keyed like DEFAULT_MATRIX

    Returns
    -------
    list of InequalityReport
    """
    matrix = DEFAULT_MATRIX if matrix is None else {**DEFAULT_MATRIX, **matrix}
    ctx = CheckContext(body, grid, policy)
    reports: List[InequalityReport] = []
    for r, s, t in matrix["holder_triples"]:
        reports.append(holder_triple_check(ctx, r, s, t))
    for r, t in matrix["monotone_pairs"]:
        reports.append(monotonicity_check(ctx, r, t))
    for t in matrix["bound_t"]:
        reports.append(polar_volume_product_bounds(ctx, t))
    for p in matrix["isoperimetric_p"]:
        reports.append(isoperimetric_check(ctx, p, santalo_c=santalo_c))
    for p in matrix["santalo_p"]:
        reports.append(santalo_product_check(ctx, p))
    for p in matrix["duality_p"]:
        reports.append(duality_check(ctx, p))
    for p, s in matrix["minus_n_pairs"]:
        reports.extend(minus_n_checks(ctx, s, p))
    reports.extend(santalo_sanity_check(ctx, santalo_c=santalo_c))
    return reports


def run_suite(grid: SphereGrid, ensemble: Optional[BodyEnsemble] = None,
              bodies: Optional[Sequence[ConvexBody]] = None, matrix: Optional[Dict[str, Any]] = None,
              santalo_c: float = DEFAULT_SANTALO_C, policy: Optional[Dict[str, float]] = None,
              progress: bool = False,
              symmetric_ensemble: Optional[BodyEnsemble] = None) -> pd.DataFrame:
    """
    Run the check matrix over deterministic bodies followed by an ensemble.

    Parameters
    ----------
    grid : SphereGrid
        Planar quadrature grid
    ensemble : BodyEnsemble, optional
        Seeded random bodies appended after ``bodies``
    bodies : sequence of ConvexBody, optional
        Deterministic bodies; defaults to deterministic_bodies()
    progress : bool
        Show a tqdm bar over bodies
    symmetric_ensemble : BodyEnsemble, optional
        Origin-symmetric batch appended last; must have ``symmetric=True``

    Returns
    -------
    pandas.DataFrame
        One row per report, ordered by (body_index, matrix order), with
        SUITE_COLUMNS
    """
    if grid.dimension != 2:
        raise ConfigurationError("The inequality suite runs on planar bodies")
    if symmetric_ensemble is not None and not symmetric_ensemble.symmetric:
        raise ConfigurationError("symmetric_ensemble must be built with symmetric=True")
    bodies = list(deterministic_bodies() if bodies is None else bodies)
    batches = [batch for batch in (ensemble, symmetric_ensemble) if batch is not None]

    def all_bodies() -> Iterable[ConvexBody]:
        yield from bodies
        for batch in batches:
            yield from batch

    total = len(bodies) + sum(len(batch) for batch in batches)
    rows = []
    for index, body in enumerate(tqdm(all_bodies(), total=total, desc="suite bodies",
                                      disable=not progress)):
        for report in check_body(body, grid, matrix, santalo_c, policy):
            rows.append({"body_index": index, **report.to_dict()})
    return pd.DataFrame(rows, columns=SUITE_COLUMNS)


def summarize(frame: pd.DataFrame) -> pd.Series:
    """Verdict counts of a suite table."""
    return frame["verdict"].value_counts().reindex(
        ["holds", "equality-case", "divergent-skip", "violated"], fill_value=0
    )
