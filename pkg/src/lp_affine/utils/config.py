"""
Configuration management utilities
"""
import yaml
from pathlib import Path
from typing import Dict, Any, Optional

from ..exceptions import ConfigurationError


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load configuration from YAML file.

    Parameters
    ----------
    config_path : str, optional
        Path to configuration file. If None, uses the config.yaml found in
        the project directory.

    Returns
    -------
    dict
        Configuration dictionary
    """
    if config_path is None:
        # Find project root and load default config
        current = Path(__file__).resolve()
        for parent in [current] + list(current.parents):
            config_file = parent / "config.yaml"
            if config_file.exists():
                config_path = str(config_file)
                break

        if config_path is None:
            raise FileNotFoundError("Could not find config.yaml in project directory")

    with open(config_path, 'r') as f:
        config = yaml.safe_load(f)

    if not isinstance(config, dict):
        raise ConfigurationError(f"Config file {config_path} does not hold a mapping")

    return config


def _section(config: Optional[Dict[str, Any]], name: str) -> Dict[str, Any]:
    if config is None:
        config = load_config()
    try:
        return config[name]
    except KeyError:
        raise ConfigurationError(f"Config is missing the '{name}' section") from None


def get_grid_defaults(config: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """
    Get default quadrature resolutions.

    Returns
    -------
    dict
        Keys 'circle', 'sphere3' (list [n_theta, n_phi]), 'mc', 'mc_seed'
    """
    return _section(config, 'grids')


def get_schedule(kind: str, config: Optional[Dict[str, Any]] = None) -> list:
    """
    Get the default geometric parameter schedule for a limit computation.

    Parameters
    ----------
    kind : str
        'floating' (delta schedule) or 'surface' (s schedule)

    Returns
    -------
    list of float
        Strictly decreasing schedule start * ratio**k, k = 0..count-1
    """
    floating = _section(config, 'floating')
    key = f"{kind}_schedule"
    if key not in floating:
        raise ConfigurationError(f"Unknown schedule kind: {kind}")
    spec = floating[key]
    return geometric_schedule(spec['start'], spec['ratio'], spec['count'])


def geometric_schedule(start: float, ratio: float, count: int) -> list:
    """Geometric schedule start * ratio**k for k = 0..count-1."""
    start, ratio, count = float(start), float(ratio), int(count)
    if start <= 0 or not 0 < ratio < 1 or count < 1:
        raise ConfigurationError(
            f"Schedule needs start > 0, 0 < ratio < 1, count >= 1 "
            f"(got {start}, {ratio}, {count})"
        )
    return [start * ratio ** k for k in range(count)]


def get_tolerance_policy(config: Optional[Dict[str, Any]] = None) -> Dict[str, float]:
    """
    Get the verdict tolerance policy.

    Returns
    -------
    dict
        'factor' multiplying the combined error estimate and 'floor'
    """
    tol = _section(config, 'tolerances')
    return {'factor': float(tol['factor']), 'floor': float(tol['floor'])}


def get_ensemble_defaults(config: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Get seed, count, symmetric count, harmonic budget and perturbation scale of the suite ensemble."""
    return _section(config, 'inequalities')['ensemble']


def get_suite_matrix(config: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Get the exponent lists, triples and pairs the inequality suite runs."""
    return _section(config, 'inequalities')['matrix']
