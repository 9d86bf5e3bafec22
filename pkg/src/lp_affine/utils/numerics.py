"""
Vectorised scalar root finding and small numeric helpers
"""
from typing import Callable

import numpy as np

BISECTION_ITERATIONS = 64


def bisect_decreasing(
    fun: Callable[[np.ndarray], np.ndarray],
    lo: np.ndarray,
    hi: np.ndarray,
    target: np.ndarray,
    iterations: int = BISECTION_ITERATIONS,
) -> np.ndarray:
    """
    Solve fun(x) = target elementwise for a decreasing function on [lo, hi].

    All problems are advanced together, one vectorised evaluation per
    iteration, and stop after a fixed iteration count so the result is
    deterministic.

    Parameters
    ----------
    fun : callable
        Vectorised function, fun(x)[i] is the i-th problem at x[i]
    lo, hi : numpy.ndarray
        Brackets with fun(lo) >= target >= fun(hi)
    target : numpy.ndarray
        Target values
    iterations : int
        Number of halvings

    Returns
    -------
    numpy.ndarray
        Midpoints of the final brackets
    """
    lo = np.array(lo, dtype=float, copy=True)
    hi = np.array(hi, dtype=float, copy=True)
    target = np.broadcast_to(np.asarray(target, dtype=float), lo.shape)
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        above = fun(mid) >= target
        lo = np.where(above, mid, lo)
        hi = np.where(above, hi, mid)
    return 0.5 * (lo + hi)


def bisect_increasing(
    fun: Callable[[np.ndarray], np.ndarray],
    lo: np.ndarray,
    hi: np.ndarray,
    target: np.ndarray,
    iterations: int = BISECTION_ITERATIONS,
) -> np.ndarray:
    """Same as bisect_decreasing for an increasing function."""
    return bisect_decreasing(lambda x: -fun(x), lo, hi, -np.asarray(target, dtype=float),
                             iterations=iterations)


def log_log_slope(x: np.ndarray, y: np.ndarray) -> float:
    """Least-squares slope of log|y| against log x."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    slope, _ = np.polyfit(np.log(x), np.log(np.abs(y)), 1)
    return float(slope)
