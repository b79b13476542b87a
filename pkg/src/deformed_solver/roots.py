"""
Level search on a descending log grid in omega.

Bound states accumulate geometrically at omega -> 0+, so the grid is
log-spaced and walked from the top of the window downwards one decade at
a time; the walk stops as soon as ``max_levels`` sign changes have been
polished. Each bracket is refined by Brent's method in ln(omega).
"""

from __future__ import annotations

import logging
import math
from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy.optimize import brentq

from common.errors import DomainError
from common.parallel import ordered_map
from ordinary_qm import CRITICAL_KAPPA, LevelQuantity, SpectrumMethod, SpectrumResult

logger = logging.getLogger(__name__)

ROOT_POINTS_PER_DECADE = 40
ROOT_XTOL = 1e-12
ROOT_RTOL = 1e-15
DEFAULT_OMEGA_MIN = 1e-8
DEFAULT_OMEGA_MAX = 0.499


def check_window(omega_min: float, omega_max: float) -> None:
    if not 0.0 < omega_min < omega_max < 0.5:
        raise DomainError(
            f"omega window must satisfy 0 < omega_min < omega_max < 1/2, got ({omega_min}, {omega_max})"
        )


def descending_log_grid(omega_min: float, omega_max: float, points_per_decade: int) -> np.ndarray:
    if points_per_decade < 1:
        raise DomainError(f"points per decade must be >= 1, got {points_per_decade}")
    decades = math.log10(omega_max / omega_min)
    n = max(2, int(math.ceil(decades * points_per_decade)) + 1)
    return np.exp(np.linspace(math.log(omega_max), math.log(omega_min), n))


def find_roots(
    fn: Callable[[float], float],
    omega_min: float,
    omega_max: float,
    max_levels: int,
    *,
    points_per_decade: int = ROOT_POINTS_PER_DECADE,
    xtol: float = ROOT_XTOL,
    workers: int | None = None,
    label: str = "quantization function",
) -> List[Tuple[float, float]]:
    """
    Zeros of ``fn`` in [omega_min, omega_max], largest omega first.

    Returns
    -------
    roots:
        (omega, |fn(omega)|) pairs, at most ``max_levels`` of them.
    """
    check_window(omega_min, omega_max)
    if max_levels < 1:
        raise DomainError(f"max_levels must be >= 1, got {max_levels}")

    grid = descending_log_grid(omega_min, omega_max, points_per_decade)
    roots: List[Tuple[float, float]] = []

    def polish(lo: float, hi: float) -> Tuple[float, float]:
        log_root = brentq(lambda s: fn(math.exp(s)), math.log(lo), math.log(hi), xtol=xtol, rtol=ROOT_RTOL)
        omega = math.exp(log_root)
        return omega, abs(fn(omega))

    prev_omega = None
    prev_value = None
    for start in range(0, len(grid), points_per_decade):
        chunk = grid[start : start + points_per_decade]
        values = ordered_map(fn, [float(w) for w in chunk], workers)
        for omega, value in zip(chunk, values):
            omega = float(omega)
            if not math.isfinite(value):
                raise DomainError(f"{label} is not finite at omega={omega}")
            if value == 0.0:
                roots.append((omega, 0.0))
            elif prev_value is not None and prev_value != 0.0 and (prev_value < 0.0) != (value < 0.0):
                roots.append(polish(omega, prev_omega))
            prev_omega, prev_value = omega, value
            if len(roots) >= max_levels:
                logger.debug("found %d levels of the %s down to omega=%g", len(roots), label, omega)
                return roots

    logger.warning(
        "bracket exhaustion: %d of %d requested levels of the %s found above omega_min=%g",
        len(roots),
        max_levels,
        label,
        omega_min,
    )
    return roots


def _empty_spectrum(method: SpectrumMethod, parameters: dict) -> SpectrumResult:
    return SpectrumResult(levels=(), method=method, quantity=LevelQuantity.OMEGA, parameters=parameters)


def spectrum_from_function(
    fn: Callable[[float], float],
    kappa: float,
    method: SpectrumMethod,
    parameters: dict,
    omega_min: float,
    omega_max: float,
    max_levels: int,
    *,
    points_per_decade: int,
    xtol: float,
    workers: Optional[int],
) -> SpectrumResult:
    """Level search shared by the exact and shooting solvers."""
    check_window(omega_min, omega_max)
    if not kappa > CRITICAL_KAPPA:
        logger.info("kappa=%g <= 1/16: no bound states, returning an empty %s spectrum", kappa, method.value)
        return _empty_spectrum(method, parameters)
    roots = find_roots(
        fn,
        omega_min,
        omega_max,
        max_levels,
        points_per_decade=points_per_decade,
        xtol=xtol,
        workers=workers,
        label=method.value,
    )
    logger.info("%s: %d levels for kappa=%g", method.value, len(roots), kappa)
    return SpectrumResult(
        levels=tuple(omega for omega, _ in roots),
        method=method,
        quantity=LevelQuantity.OMEGA,
        parameters=parameters,
        residuals=tuple(residual for _, residual in roots),
    )


__all__ = [
    "ROOT_POINTS_PER_DECADE",
    "ROOT_XTOL",
    "DEFAULT_OMEGA_MIN",
    "DEFAULT_OMEGA_MAX",
    "check_window",
    "descending_log_grid",
    "find_roots",
    "spectrum_from_function",
]
