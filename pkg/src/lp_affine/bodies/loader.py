"""
Body spec files

A body spec is a JSON object {"kind": "...", ...parameters}. See
docs/BODY_SPEC.md for the schema of every kind.
"""
import json
from pathlib import Path
from typing import Any, Dict, Union

import numpy as np

from ..exceptions import ConfigurationError, GeometryError, PreconditionError
from .convex import (
    Arc,
    ConvexBody,
    CrossPolytope,
    Cube,
    Ellipsoid,
    HalfspacePolytope,
    PiecewiseArc,
    PlanarSupport,
    make_rounded_intersection,
    unit_ball,
)

KINDS = (
    "ellipsoid",
    "ball",
    "disc",
    "planar_support",
    "piecewise_arc",
    "rounded_intersection",
    "halfspace_polytope",
    "cube",
    "cross_polytope",
    "random_smooth",
)


def _require(spec: Dict[str, Any], key: str):
    if key not in spec:
        raise ConfigurationError(f"Body spec of kind '{spec.get('kind')}' is missing '{key}'")
    return spec[key]


def _dimension(spec: Dict[str, Any], default: int = 2) -> int:
    n = spec.get("dimension", default)
    if not isinstance(n, int) or n < 2:
        raise ConfigurationError(f"Body dimension must be an integer >= 2 (got {n!r})")
    return n


def _array(value, name: str) -> np.ndarray:
    try:
        arr = np.asarray(value, dtype=float)
    except (TypeError, ValueError):
        raise ConfigurationError(f"Field '{name}' must be numeric") from None
    if not np.all(np.isfinite(arr)):
        raise ConfigurationError(f"Field '{name}' holds non-finite values")
    return arr


def body_from_spec(spec: Dict[str, Any]) -> ConvexBody:
    """
    Build a body from a parsed spec mapping.

    Parameters
    ----------
    spec : dict
        Mapping with a 'kind' key and the kind's parameters

    Returns
    -------
    ConvexBody
        The described body

    Raises
    ------
    ConfigurationError
        For unknown kinds, missing fields or malformed values, including
        construction failures of the body itself

    Examples
    --------
    >>> body_from_spec({"kind": "ellipsoid", "semi_axes": [2, 1]}).describe()
    'ellipsoid(2,1)'
    """
    if not isinstance(spec, dict):
        raise ConfigurationError("Body spec must be a JSON object")
    kind = spec.get("kind")
    if kind not in KINDS:
        raise ConfigurationError(f"Unknown body kind {kind!r}; expected one of {', '.join(KINDS)}")

    try:
        return _build(kind, spec)
    except (GeometryError, PreconditionError) as e:
        raise ConfigurationError(f"Invalid {kind} body: {e}") from e


def _build(kind: str, spec: Dict[str, Any]) -> ConvexBody:
    if kind == "ellipsoid":
        axes = _array(_require(spec, "semi_axes"), "semi_axes").reshape(-1)
        orientation = spec.get("orientation")
        if orientation is not None:
            orientation = _array(orientation, "orientation")
        return Ellipsoid(len(axes), semi_axes=axes, orientation=orientation, provenance="spec")

    if kind in ("ball", "disc"):
        n = _dimension(spec, 2)
        radius = float(spec.get("radius", 1.0))
        if radius == 1.0:
            return unit_ball(n)
        return Ellipsoid(n, semi_axes=np.full(n, radius), provenance="spec")

    if kind == "planar_support":
        a = _array(_require(spec, "cos"), "cos").reshape(-1)
        b = _array(spec.get("sin", np.zeros_like(a)), "sin").reshape(-1)
        return PlanarSupport(2, cos_coeffs=a, sin_coeffs=b, provenance="spec")

    if kind == "piecewise_arc":
        arcs = []
        for i, item in enumerate(_require(spec, "arcs")):
            try:
                arcs.append(Arc(_array(item["center"], f"arcs[{i}].center"),
                                float(item["radius"]), float(item["start"]), float(item["end"])))
            except (KeyError, TypeError):
                raise ConfigurationError(
                    f"Arc {i} needs center, radius, start and end"
                ) from None
        return PiecewiseArc(2, arcs=tuple(arcs), provenance="spec")

    if kind == "rounded_intersection":
        return make_rounded_intersection(float(_require(spec, "R")), float(_require(spec, "eps")))

    if kind == "halfspace_polytope":
        normals = _array(_require(spec, "normals"), "normals")
        offsets = _array(_require(spec, "offsets"), "offsets")
        if normals.ndim != 2:
            raise ConfigurationError("Polytope normals must be a list of vectors")
        return HalfspacePolytope(normals.shape[1], normals=normals, offsets=offsets,
                                 provenance="spec")

    if kind == "cube":
        return Cube(_dimension(spec, 2))

    if kind == "cross_polytope":
        return CrossPolytope(_dimension(spec, 2))

    # random_smooth: the ensemble generator lives with the inequality harness
    from ..inequalities.ensemble import random_smooth_body
    return random_smooth_body(
        seed=int(_require(spec, "seed")),
        harmonic_budget=int(spec.get("harmonic_budget", 8)),
        perturbation_scale=float(spec.get("perturbation_scale", 0.2)),
    )


def load_body(path: Union[str, Path]) -> ConvexBody:
    """
    Load a body spec file.

    Parameters
    ----------
    path : str or Path
        JSON file holding one body spec

    Returns
    -------
    ConvexBody
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Body spec not found: {path}")
    try:
        with open(path, "r") as f:
            spec = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"Body spec {path} is not valid JSON: {e}") from e
    return body_from_spec(spec)
