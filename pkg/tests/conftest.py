"""
Shared fixtures for the lp_affine tests.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add src to path
repo_root = Path(__file__).parent.parent
sys.path.insert(0, str(repo_root / "src"))

from lp_affine.bodies import Cube, Ellipsoid, unit_ball  # noqa: E402
from lp_affine.inequalities import random_smooth_body  # noqa: E402
from lp_affine.quadrature import grid_circle  # noqa: E402


@pytest.fixture(scope="session")
def repo_path():
    return repo_root


@pytest.fixture(scope="session")
def circle_grid():
    return grid_circle(4096)


@pytest.fixture(scope="session")
def disc():
    return unit_ball(2)


@pytest.fixture(scope="session")
def ellipse():
    return Ellipsoid(2, semi_axes=np.array([2.0, 1.0]))


@pytest.fixture(scope="session")
def square():
    return Cube(2)


@pytest.fixture(scope="session")
def smooth_body():
    return random_smooth_body(seed=3)
