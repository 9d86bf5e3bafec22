"""
Command-line front end

Subcommands load a body spec, select a quadrature grid and write one
result table (CSV or JSON). Defaults come from config.yaml; flags override
them.

Exit codes: 0 success, 1 inequality violation, 2 configuration error,
3 divergent value without --allow-divergent, 4 geometric precondition
failure (origin not interior, empty floating body, failed construction).
"""
import argparse
import math
import sys
from dataclasses import replace
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from .asa import asa_boundary_form, asa_minus_n, asa_sphere_form, lp_weight
from .asa.functionals import POLE_TOL
from .bodies import ConvexBody, PiecewiseArc, load_body, unit_ball, volume
from .exceptions import (
    ConfigurationError,
    DegenerateBodyError,
    DivergenceError,
    ExponentError,
    GeometryError,
    ParameterError,
    PreconditionError,
    UnsupportedKindError,
)
from .floating import constant_weight, cube_limit_estimate, floating_limit, surface_limit
from .floating.caps import MIN_DIRECTIONS
from .inequalities import BodyEnsemble, CheckContext, duality_check, rounded_body_bounds, run_suite
from .inequalities.suite import summarize
from .quadrature import SphereGrid, grid_arcs, grid_circle, grid_mc, grid_sphere3
from .utils.config import (
    geometric_schedule,
    get_ensemble_defaults,
    get_grid_defaults,
    get_schedule,
    get_suite_matrix,
    get_tolerance_policy,
    load_config,
)
from .utils.export import write_table

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_CONFIG = 2
EXIT_DIVERGENCE = 3
EXIT_GEOMETRY = 4
MIN_LIMIT_SCHEDULE = 4

COMMANDS = ("asp", "duality", "floating", "surface", "suite", "cube-example",
            "rounded-example", "info")

ASP_COLUMNS = ["p", "value", "error_estimate", "method", "nodes_used", "divergent",
               "boundary_value", "agreement", "grid", "caveat"]


# ---------------------------------------------------------------------------
# Flag parsing
# ---------------------------------------------------------------------------

def parse_p_list(text: str) -> List[float]:
    """
    Parse a comma-separated exponent list; 'inf', '+inf' and '-inf' allowed.

    Examples
    --------
    >>> parse_p_list("0, 1, inf, -0.5")
    [0.0, 1.0, inf, -0.5]
    """
    values = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            value = float(item)
        except ValueError:
            raise ConfigurationError(f"Invalid exponent '{item}' in --p") from None
        if math.isnan(value):
            raise ConfigurationError("Exponent list holds NaN")
        values.append(value)
    if not values:
        raise ConfigurationError("Empty exponent list")
    return values


def parse_schedule(text: str) -> List[float]:
    """
    Parse 'geom:start:ratio:count' into a decreasing schedule.

    Examples
    --------
    >>> parse_schedule("geom:0.4:0.5:3")
    [0.4, 0.2, 0.1]
    """
    parts = text.split(":")
    if len(parts) != 4 or parts[0] != "geom":
        raise ConfigurationError(f"Schedule must look like geom:start:ratio:count (got '{text}')")
    try:
        return geometric_schedule(float(parts[1]), float(parts[2]), int(parts[3]))
    except ValueError:
        raise ConfigurationError(f"Non-numeric schedule '{text}'") from None


def _limit_schedule(args, kind: str, config: Dict[str, Any]) -> List[float]:
    schedule = parse_schedule(args.schedule) if args.schedule else get_schedule(kind, config)
    if len(schedule) < MIN_LIMIT_SCHEDULE:
        raise ConfigurationError(
            f"Limit schedules need at least {MIN_LIMIT_SCHEDULE} values (got {len(schedule)})"
        )
    return schedule


def _limit_ndirs(args, config: Dict[str, Any]) -> int:
    ndirs = int(args.ndirs or config["floating"]["Ndirs"])
    if ndirs < MIN_DIRECTIONS:
        raise ConfigurationError(f"--ndirs must be at least {MIN_DIRECTIONS} (got {ndirs})")
    return ndirs


def build_grid(text: Optional[str], body: ConvexBody, config: Dict[str, Any],
               seed: Optional[int] = None) -> SphereGrid:
    """
    Grid from a SCHEME:RES flag, or the dimension default from the config.

    Schemes: circle:N, sphere3:AxB, mc:N, arcs:M (nodes per arc of a
    piecewise-arc body). Without a flag, arc bodies get arcs:64.
    """
    defaults = get_grid_defaults(config)
    n = body.dimension
    mc_seed = int(defaults.get("mc_seed", 0) if seed is None else seed)
    if text is None:
        if isinstance(body, PiecewiseArc):
            return grid_arcs(body.breakpoints, int(defaults.get("arc_nodes", 64)))
        if n == 2:
            return grid_circle(int(defaults["circle"]))
        if n == 3:
            n_theta, n_phi = defaults["sphere3"]
            return grid_sphere3(int(n_theta), int(n_phi))
        return grid_mc(n, int(defaults["mc"]), mc_seed)

    scheme, _, res = text.partition(":")
    try:
        if scheme == "circle":
            grid = grid_circle(int(res))
        elif scheme == "sphere3":
            n_theta, _, n_phi = res.partition("x")
            grid = grid_sphere3(int(n_theta), int(n_phi))
        elif scheme == "mc":
            grid = grid_mc(n, int(res), mc_seed)
        elif scheme == "arcs":
            if not isinstance(body, PiecewiseArc):
                raise ConfigurationError("arcs grids need a piecewise_arc or rounded_intersection body")
            grid = grid_arcs(body.breakpoints, int(res))
        else:
            raise ConfigurationError(f"Unknown grid scheme '{scheme}' (circle, sphere3, mc, arcs)")
    except ValueError as e:
        if isinstance(e, ConfigurationError):
            raise
        raise ConfigurationError(f"Invalid grid resolution in '{text}'") from None
    if grid.dimension != n:
        raise ConfigurationError(f"Grid '{text}' is {grid.dimension}-dimensional, body is {n}-dimensional")
    return grid


def _output_path(args, config: Dict[str, Any]) -> Path:
    if args.out:
        return Path(args.out)
    directory = config.get("outputs", {}).get("directory", "outputs")
    return Path(directory) / f"{args.command.replace('-', '_')}.{args.format}"


def _require_body(args) -> ConvexBody:
    if not args.body:
        raise ConfigurationError(f"'{args.command}' needs --body PATH")
    return load_body(args.body)


def _banner(title: str):
    print("=" * 70)
    print(title)
    print("=" * 70)


def _write(frame: pd.DataFrame, args, config: Dict[str, Any]) -> Path:
    path = write_table(frame, _output_path(args, config), args.format)
    print(f"\n✓ Wrote {len(frame)} rows to {path}")
    return path


def _verdict_exit(frame: pd.DataFrame) -> int:
    counts = summarize(frame)
    print("\nVerdicts:")
    for verdict, count in counts.items():
        print(f"  {verdict}: {count}")
    if counts["violated"] > 0:
        print("\n✗ Inequality violations found")
        return EXIT_VIOLATION
    return EXIT_OK


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_asp(args, config: Dict[str, Any]) -> int:
    """Table of as_p(K) for every requested p, with the boundary form when defined."""
    body = _require_body(args)
    grid = build_grid(args.grid, body, config, args.seed)
    p_list = parse_p_list(args.p) if args.p else [float(p) for p in config["asp"]["p_list"]]
    n = body.dimension
    _banner(f"L_p affine surface areas of {body.describe()}")
    print(f"Grid: {grid.label} ({len(grid)} nodes)")

    rows = []
    for p in p_list:
        at_pole = math.isfinite(p) and abs(n + p) < POLE_TOL
        value = asa_minus_n(body, grid) if at_pole else asa_sphere_form(body, p, grid)
        if value.divergent and not args.allow_divergent:
            raise DivergenceError(f"as_p diverges at p = {p:g} for {body.describe()}")
        boundary = math.nan
        if body.smooth and not at_pole:
            boundary = asa_boundary_form(body, p, grid).value
        agreement = (abs(boundary - value.value) / abs(value.value)
                     if math.isfinite(boundary) and value.value not in (0.0, math.inf) else math.nan)
        rows.append({
            "p": p,
            "value": value.value,
            "error_estimate": value.error_estimate,
            "method": value.method,
            "nodes_used": value.nodes_used,
            "divergent": value.divergent,
            "boundary_value": boundary,
            "agreement": agreement,
            "grid": grid.label,
            "caveat": value.caveat or "",
        })
        print(f"  p = {p:>8g}: {value.value:.12g}  ({value.method})")
    _write(pd.DataFrame(rows, columns=ASP_COLUMNS), args, config)
    return EXIT_OK


def cmd_duality(args, config: Dict[str, Any]) -> int:
    """as_p(K) against as_{n^2/p}(K°) for every requested p."""
    body = _require_body(args)
    grid = build_grid(args.grid, body, config, args.seed)
    p_list = parse_p_list(args.p) if args.p else [float(p) for p in config["duality"]["p_list"]]
    _banner(f"Duality as_p(K) = as_(n^2/p)(K°) for {body.describe()}")
    ctx = CheckContext(body, grid, get_tolerance_policy(config))
    rows = []
    for p in p_list:
        report = duality_check(ctx, p)
        if report.verdict == "divergent-skip" and not args.allow_divergent:
            raise DivergenceError(report.note)
        rows.append(report.to_dict())
        print(f"  p = {p:>8g}: margin {report.margin:.3e} ({report.verdict})")
    frame = pd.DataFrame(rows)
    _write(frame, args, config)
    return _verdict_exit(frame)


def _limit_summary(estimate):
    print(f"\n  extrapolated limit: {estimate.extrapolated:.10g}")
    print(f"  fitted exponent:    {estimate.fitted_exponent:.6f}")
    if estimate.target is not None:
        print(f"  target:             {estimate.target:.10g}")
        print(f"  relative gap:       {estimate.relative_gap:.3e}")
    if estimate.cross_check_target is not None:
        print(f"  cross-check gap:    {estimate.cross_check_gap:.3e}")
    for note in estimate.notes:
        print(f"  ⚠ {note}")


def cmd_floating(args, config: Dict[str, Any]) -> int:
    """Floating-body limit ratios along the delta schedule."""
    body = _require_body(args)
    grid = build_grid(args.grid, body, config, args.seed)
    schedule = _limit_schedule(args, "floating", config)
    ndirs = _limit_ndirs(args, config)
    _banner(f"Floating bodies of {body.describe()}")
    print(f"Schedule: {len(schedule)} values from {schedule[0]:g}, Ndirs = {ndirs}")
    estimate = floating_limit(body, schedule, ndirs, grid, progress=args.progress)
    _limit_summary(estimate)
    _write(estimate.to_frame(), args, config)
    return EXIT_OK


def cmd_surface(args, config: Dict[str, Any]) -> int:
    """Surface-body limit ratios with the f_p weight (or a constant weight)."""
    body = _require_body(args)
    grid = build_grid(args.grid, body, config, args.seed)
    schedule = _limit_schedule(args, "surface", config)
    ndirs = _limit_ndirs(args, config)
    if args.weight.startswith("const:"):
        try:
            c = float(args.weight.split(":", 1)[1])
        except ValueError:
            raise ConfigurationError(f"Invalid constant weight '{args.weight}'") from None
        if not c > 0.0:
            raise ConfigurationError(f"Constant weight must be positive (got {c:g})")
        weight, label = constant_weight(c), f"constant {c:g}"
    elif args.weight == "fp":
        p = parse_p_list(args.p)[0] if args.p else 1.0
        weight, label = lp_weight(body, p), f"f_p, p = {p:g}"
    else:
        raise ConfigurationError(f"Unknown weight '{args.weight}' (fp or const:C)")
    _banner(f"Surface bodies of {body.describe()} ({label})")
    estimate = surface_limit(body, weight, schedule, ndirs, grid, progress=args.progress)
    _limit_summary(estimate)
    _write(estimate.to_frame(), args, config)
    return EXIT_OK


def cmd_suite(args, config: Dict[str, Any]) -> int:
    """Full inequality matrix over the deterministic bodies, a seeded ensemble and a symmetric batch."""
    defaults = get_ensemble_defaults(config)
    ensemble = BodyEnsemble(
        seed=int(defaults["seed"] if args.seed is None else args.seed),
        count=int(args.count or defaults["count"]),
        harmonic_budget=int(defaults["harmonic_budget"]),
        perturbation_scale=float(defaults["perturbation_scale"]),
    )
    symmetric_count = int(defaults.get("symmetric_count", 0) if args.symmetric_count is None
                          else args.symmetric_count)
    if symmetric_count < 0:
        raise ConfigurationError(f"--symmetric-count must be non-negative (got {symmetric_count})")
    symmetric = replace(ensemble, count=symmetric_count, symmetric=True) if symmetric_count else None
    santalo_c = args.santalo_c if args.santalo_c is not None else float(config["inequalities"]["santalo_c"])
    grid = build_grid(args.grid, unit_ball(2), config)
    if grid.scheme != "circle-uniform":
        raise ConfigurationError("The suite runs on circle grids")
    _banner("L_p affine inequality suite")
    print(f"Ensemble: seed {ensemble.seed}, {ensemble.count} bodies + {symmetric_count} symmetric; "
          f"grid {grid.label}; c = {santalo_c:g}")
    frame = run_suite(grid, ensemble=ensemble, matrix=get_suite_matrix(config), santalo_c=santalo_c,
                      policy=get_tolerance_policy(config), progress=args.progress,
                      symmetric_ensemble=symmetric)
    skipped = int((frame["verdict"] == "divergent-skip").sum())
    if skipped and not args.allow_divergent:
        print(f"\n⚠ {skipped} checks skipped on divergent values")
    _write(frame, args, config)
    return _verdict_exit(frame)


def cmd_cube_example(args, config: Dict[str, Any]) -> int:
    """Closed-form cube ratios, whose log-log slope shows the divergence."""
    section = config.get("cube_example", {})
    n = int(args.dimension or section.get("dimension", 2))
    if n < 2:
        raise ConfigurationError(f"--dimension must be at least 2 (got {n})")
    if args.schedule:
        deltas = parse_schedule(args.schedule)
    else:
        spec = section.get("schedule", {"start": 1e-2, "ratio": 0.1, "count": 7})
        deltas = geometric_schedule(spec["start"], spec["ratio"], spec["count"])
    _banner(f"Cube counterexample, n = {n}")
    estimate = cube_limit_estimate(n, deltas)
    _limit_summary(estimate)
    _write(estimate.to_frame(), args, config)
    return EXIT_OK


def cmd_rounded_example(args, config: Dict[str, Any]) -> int:
    """Bounds on as_p of the rounded four-disc body K(R, eps)."""
    section = config["rounded_example"]
    R = float(args.R if args.R is not None else section["R"])
    eps = float(args.eps if args.eps is not None else section["eps"])
    if not (R >= 10.0 and 0.0 < eps <= 0.1):
        raise ConfigurationError(f"Rounded example needs R >= 10 and 0 < eps <= 0.1 (got {R:g}, {eps:g})")
    p_list = parse_p_list(args.p) if args.p else [float(p) for p in section["p_list"]]
    nodes = int(get_grid_defaults(config).get("arc_nodes", 64))
    _banner(f"Rounded body K(R={R:g}, eps={eps:g})")
    rows = []
    for p in p_list:
        report = rounded_body_bounds(R, eps, p, nodes_per_arc=nodes, policy=get_tolerance_policy(config))
        rows.append(report.to_dict())
        print(f"  p = {p:>6g}: {report.lhs:.6g} vs {report.rhs:.6g} ({report.verdict})")
    frame = pd.DataFrame(rows)
    _write(frame, args, config)
    return _verdict_exit(frame)


def cmd_info(args, config: Dict[str, Any]) -> int:
    """Print a body summary."""
    body = _require_body(args)
    grid = build_grid(args.grid, body, config, args.seed)
    n = body.dimension
    _banner(f"Body: {body.describe()}")
    print(f"  kind:         {body.kind}")
    print(f"  dimension:    {n}")
    print(f"  provenance:   {body.provenance}")
    print(f"  volume:       {volume(body, grid):.12g}")
    as_inf = asa_sphere_form(body, math.inf, grid)
    print(f"  polar volume: {as_inf.value / n:.12g}")
    for p in (0.0, 1.0, math.inf):
        value = asa_sphere_form(body, p, grid)
        print(f"  as_{p:g}:{' ' * (10 - len(f'{p:g}'))}{value.value:.12g}")
    print(f"  grid:         {grid.label}")
    return EXIT_OK


HANDLERS = {
    "asp": cmd_asp,
    "duality": cmd_duality,
    "floating": cmd_floating,
    "surface": cmd_surface,
    "suite": cmd_suite,
    "cube-example": cmd_cube_example,
    "rounded-example": cmd_rounded_example,
    "info": cmd_info,
}


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per computation."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--body', type=str, default=None, help='Body spec JSON file')
    common.add_argument('--p', type=str, default=None,
                        help='Comma-separated exponents, e.g. "0,1,inf,-0.5"')
    common.add_argument('--grid', type=str, default=None,
                        help='Quadrature grid SCHEME:RES (circle:4096, sphere3:128x64, mc:200000, arcs:64)')
    common.add_argument('--schedule', type=str, default=None,
                        help='Parameter schedule geom:start:ratio:count')
    common.add_argument('--out', type=str, default=None, help='Output file path')
    common.add_argument('--format', choices=['csv', 'json'], default='csv',
                        help='Output format (default: csv)')
    common.add_argument('--seed', type=int, default=None, help='Ensemble / Monte Carlo seed')
    common.add_argument('--santalo-c', dest='santalo_c', type=float, default=None,
                        help='Inverse Santalo constant for p < -n (default from config)')
    common.add_argument('--allow-divergent', action='store_true',
                        help='Report divergent values instead of exiting with code 3')
    common.add_argument('--config', type=str, default=None,
                        help='Path to config file (default: config.yaml in repo root)')
    common.add_argument('--progress', action='store_true', help='Show progress bars')

    parser = argparse.ArgumentParser(
        prog='lp-affine',
        description='L_p affine surface areas, floating bodies and affine isoperimetric inequalities',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # as_p of a body for several exponents
  %(prog)s asp --body disc.json --p 0,1,inf

  # floating-body limit of an ellipse
  %(prog)s floating --body ellipse.json --schedule geom:1e-2:0.25:7

  # inequality suite over the seeded ensemble
  %(prog)s suite --seed 7 --out outputs/suite.csv
        """
    )
    sub = parser.add_subparsers(dest='command', required=True)
    for name in ("asp", "duality", "floating", "info"):
        command = sub.add_parser(name, parents=[common], help=HANDLERS[name].__doc__)
        if name == "floating":
            command.add_argument('--ndirs', type=int, default=None, help='Cut directions')
    surface = sub.add_parser('surface', parents=[common], help=cmd_surface.__doc__)
    surface.add_argument('--ndirs', type=int, default=None, help='Cut directions')
    surface.add_argument('--weight', type=str, default='fp',
                         help='fp (weight f_p with the first --p value) or const:C')
    suite = sub.add_parser('suite', parents=[common], help=cmd_suite.__doc__)
    suite.add_argument('--count', type=int, default=None, help='Ensemble size')
    suite.add_argument('--symmetric-count', type=int, default=None,
                       help='Size of the origin-symmetric batch (0 skips it)')
    cube = sub.add_parser('cube-example', parents=[common], help=cmd_cube_example.__doc__)
    cube.add_argument('--dimension', type=int, default=None, help='Cube dimension n')
    rounded = sub.add_parser('rounded-example', parents=[common], help=cmd_rounded_example.__doc__)
    rounded.add_argument('--R', type=float, default=None, help='Big radius R')
    rounded.add_argument('--eps', type=float, default=None, help='Corner radius eps')
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one subcommand and return its exit code."""
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
        return HANDLERS[args.command](args, config)
    except DivergenceError as e:
        print(f"\n✗ Divergent value: {e}", file=sys.stderr)
        print("  Re-run with --allow-divergent to report it instead.", file=sys.stderr)
        return EXIT_DIVERGENCE
    except (ConfigurationError, ParameterError, ExponentError,
            UnsupportedKindError, FileNotFoundError, KeyError) as e:
        print(f"\n✗ Configuration error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except (PreconditionError, GeometryError, DegenerateBodyError) as e:
        print(f"\n✗ Geometric precondition failed: {e}", file=sys.stderr)
        return EXIT_GEOMETRY


if __name__ == "__main__":
    sys.exit(main())
