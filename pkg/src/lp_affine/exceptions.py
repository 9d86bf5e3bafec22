"""
Exception and warning types shared across the package
"""


class LpAffineError(Exception):
    """Base class for all package errors."""


class ConfigurationError(LpAffineError, ValueError):
    """Invalid grid, config file, CLI flag or body spec file."""


class PreconditionError(LpAffineError, ValueError):
    """An operation was called outside its domain (e.g. origin not interior)."""


class UnsupportedKindError(LpAffineError, NotImplementedError):
    """The operation is not defined for this kind of convex body."""


class ExponentError(LpAffineError, ValueError):
    """Exponent p too close to the pole p = -n."""


class ParameterError(LpAffineError, ValueError):
    """Inadmissible exponent combination for an inequality check."""


class DegenerateBodyError(LpAffineError):
    """A halfspace intersection came out empty or did not contain the origin."""


class GeometryError(LpAffineError):
    """A construction failed (convexity, tangency, root bracketing)."""


class DivergenceError(LpAffineError):
    """A divergent functional value was met where a finite one is required."""


class DegradedAccuracyWarning(UserWarning):
    """Numerical accuracy is below the configured tolerance."""
