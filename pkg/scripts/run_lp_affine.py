#!/usr/bin/env python3
"""
Run lp_affine computations from a source checkout

Thin wrapper around the package command line, for use without installing
the package.

Usage:
    python scripts/run_lp_affine.py COMMAND [options]

Examples:
    # as_p of the unit disc
    python scripts/run_lp_affine.py asp --body bodies/disc.json --p 0,1,inf

    # Floating-body limit with the default schedule
    python scripts/run_lp_affine.py floating --body bodies/disc.json

    # Inequality suite over 10 random bodies
    python scripts/run_lp_affine.py suite --count 10 --out outputs/suite.csv
"""

import sys
from pathlib import Path

# Add src to path
repo_root = Path(__file__).parent.parent
sys.path.insert(0, str(repo_root / "src"))

from lp_affine.cli import main


if __name__ == "__main__":
    sys.exit(main())
