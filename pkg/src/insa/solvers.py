"""Scalar Newton iteration shared by the altitude and offset solvers."""

from __future__ import annotations

import math
from typing import Callable

from .errors import NoConvergence


def newton(
    f: Callable[[float], float],
    fprime: Callable[[float], float],
    x0: float,
    *,
    tol: float,
    max_iter: int = 50,
) -> tuple[float, int]:
    """Newton root finding for a smooth monotone scalar function.

    Stops once the step magnitude drops below ``tol`` and returns the root
    together with the number of iterations used.
    """
    x = x0
    for iteration in range(1, max_iter + 1):
        slope = fprime(x)
        if slope == 0.0 or not math.isfinite(slope):
            raise NoConvergence(f"derivative unusable at x={x!r}")
        step = f(x) / slope
        x -= step
        if not math.isfinite(x):
            raise NoConvergence(f"iteration diverged from x0={x0!r}")
        if abs(step) < tol:
            return x, iteration
    raise NoConvergence(
        f"no convergence after {max_iter} iterations (last step {step!r})"
    )
