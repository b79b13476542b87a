"""
Quantization condition for beta = beta'
---------------------------------------

For omega4 = 1/2 the bound-state condition is

    h(omega) = 2F1(a, b; 3/2; (2 omega - 1) / (2 omega)) = 0,
    a, b = 5/4 -+ nu~/2.

The argument runs to -oo as omega -> 0+, so h is evaluated through the
Pfaff transform

    h = (2 omega)^a 2F1(a, c - b; c; 1 - 2 omega)

and the near-one evaluator, which stays accurate for 2 omega far below
machine epsilon. For supercritical coupling a and b are complex
conjugates and h is real; the imaginary part of the raw value is checked
and discarded.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Tuple

import numpy as np
import pandas as pd

from common.errors import DomainError, SolverError
from common.parallel import ordered_map
from deformed_model import Deformation, dimensionless_params, hyp_bundle_special
from ordinary_qm import CRITICAL_KAPPA, SpectrumMethod, SpectrumResult
from special_fn import Hyp2F1Params, hyp2f1_near_one

from .roots import (
    DEFAULT_OMEGA_MAX,
    DEFAULT_OMEGA_MIN,
    ROOT_POINTS_PER_DECADE,
    ROOT_XTOL,
    descending_log_grid,
    spectrum_from_function,
)
from .shooting import shooting_tail_coefficient

logger = logging.getLogger(__name__)

REALITY_TOL = 1e-10

CRITICAL_KAPPA_BRACKET = (0.02, 0.3)
CRITICAL_OMEGA_FLOOR = 1e-100
CRITICAL_POINTS_PER_DECADE = 10


class ScanMethod(str, Enum):
    HYPERGEOMETRIC_EXACT = "hypergeometric_exact"
    SHOOTING_GENERAL = "shooting_general"


def _check_omega(omega: float) -> None:
    if not 0.0 < omega < 0.5:
        raise DomainError(f"quantization function needs 0 < omega < 1/2, got {omega}")


def _quantization_parts(kappa: float, omega: float) -> Tuple[complex, float]:
    _check_omega(omega)
    p = hyp_bundle_special(dimensionless_params(kappa, 0.5, omega))
    pfaff = Hyp2F1Params(p.a, p.c - p.b, p.c)
    prefactor = cmath.exp(p.a * math.log(2.0 * omega))
    value = hyp2f1_near_one(pfaff, 2.0 * omega)
    return prefactor * value, abs(prefactor) * abs(value)


def quantization_value(kappa: float, omega: float) -> complex:
    """Raw complex value of h(omega) before the reality check."""
    return _quantization_parts(kappa, omega)[0]


def quantization_h_special(kappa: float, omega: float) -> float:
    raw, scale = _quantization_parts(kappa, omega)
    if abs(raw.imag) > REALITY_TOL * scale:
        logger.warning(
            "quantization function has a sizeable imaginary part at kappa=%g omega=%g: %.3e (scale %.3e)",
            kappa,
            omega,
            raw.imag,
            scale,
        )
    return raw.real


def find_spectrum_exact(
    kappa: float,
    omega_min: float = DEFAULT_OMEGA_MIN,
    omega_max: float = DEFAULT_OMEGA_MAX,
    max_levels: int = 3,
    *,
    points_per_decade: int = ROOT_POINTS_PER_DECADE,
    xtol: float = ROOT_XTOL,
    workers: Optional[int] = None,
) -> SpectrumResult:
    """
    Zeros of h(omega) in [omega_min, omega_max] for beta = beta', ground
    state first. Residuals are |h| at the polished roots.
    """
    parameters = {
        "kappa": kappa,
        "omega4": 0.5,
        "omega_min": omega_min,
        "omega_max": omega_max,
        "max_levels": max_levels,
    }
    return spectrum_from_function(
        lambda omega: quantization_h_special(kappa, omega),
        kappa,
        SpectrumMethod.EXACT_DEFORMED,
        parameters,
        omega_min,
        omega_max,
        max_levels,
        points_per_decade=points_per_decade,
        xtol=xtol,
        workers=workers,
    )


@dataclass(frozen=True)
class QuantizationScan:
    """Quantization function sampled on an increasing omega grid."""

    kappa: float
    omega4: float
    omegas: Tuple[float, ...]
    values: Tuple[float, ...]
    method: ScanMethod

    def __post_init__(self) -> None:
        object.__setattr__(self, "method", ScanMethod(self.method))
        if len(self.omegas) != len(self.values):
            raise DomainError(f"{len(self.values)} values for {len(self.omegas)} grid points")
        if any(hi <= lo for lo, hi in zip(self.omegas, self.omegas[1:])):
            raise DomainError("scan grid must be strictly increasing in omega")
        if not all(math.isfinite(v) for v in self.values):
            raise DomainError("quantization scan contains non-finite values")

    @property
    def grid(self) -> List[Tuple[float, float]]:
        return list(zip(self.omegas, self.values))

    def sign_change_omegas(self) -> List[float]:
        """Geometric midpoints of the brackets where h changes sign."""
        found = []
        for (w0, h0), (w1, h1) in zip(self.grid, self.grid[1:]):
            if h0 == 0.0:
                found.append(w0)
            elif (h0 < 0.0) != (h1 < 0.0) and h1 != 0.0:
                found.append(math.sqrt(w0 * w1))
        if self.values and self.values[-1] == 0.0:
            found.append(self.omegas[-1])
        return found

    def sign_changes(self) -> int:
        return len(self.sign_change_omegas())

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"omega": list(self.omegas), "h": list(self.values)})


def quantization_scan(
    kappa: float,
    omegas: Iterable[float],
    method: ScanMethod | str = ScanMethod.HYPERGEOMETRIC_EXACT,
    omega4: float = 0.5,
    workers: Optional[int] = None,
) -> QuantizationScan:
    """
    Sample the quantization function on ``omegas`` (sorted on the way in).

    ``hypergeometric_exact`` needs omega4 = 1/2; ``shooting_general``
    samples the p^-2 tail coefficient C1(omega) for any omega4.
    """
    method = ScanMethod(method)
    grid = sorted(float(w) for w in omegas)
    for w in grid:
        _check_omega(w)

    if method is ScanMethod.HYPERGEOMETRIC_EXACT:
        if abs(omega4 - 0.5) > 1e-12:
            raise DomainError(f"the hypergeometric scan needs omega4 = 1/2, got {omega4}")

        def fn(omega: float) -> float:
            return quantization_h_special(kappa, omega)

    else:

        def fn(omega: float) -> float:
            return shooting_tail_coefficient(kappa, omega4, omega)

    values = ordered_map(fn, grid, workers)
    return QuantizationScan(
        kappa=float(kappa),
        omega4=float(omega4),
        omegas=tuple(grid),
        values=tuple(values),
        method=method,
    )


def _has_bound_state(kappa: float) -> bool:
    grid = descending_log_grid(CRITICAL_OMEGA_FLOOR, DEFAULT_OMEGA_MAX, CRITICAL_POINTS_PER_DECADE)
    prev = None
    for omega in grid:
        value = quantization_h_special(kappa, float(omega))
        if prev is not None and (prev < 0.0) != (value < 0.0):
            return True
        prev = value
    return False


def critical_coupling(d: Deformation, tol: float = 1e-3) -> float:
    """
    Smallest coupling with at least one bound state, by bisection.

    ``d`` must be a genuine deformation: with beta + beta' = 0 there is no
    threshold, the spectrum being unbounded below for kappa > 1/4.
    The existence test scans h down to omega = 1e-100, where the
    quantization condition does not depend on omega4 at leading order, so
    every admissible ``d`` yields the same kappa*.
    """
    if not isinstance(d, Deformation):
        raise DomainError(f"critical coupling needs a Deformation, got {type(d).__name__}")
    d.require_deformed()
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    omega4 = d.omega4
    lo, hi = CRITICAL_KAPPA_BRACKET
    if _has_bound_state(lo) or not _has_bound_state(hi):
        raise SolverError(f"critical coupling is not bracketed by kappa in {CRITICAL_KAPPA_BRACKET}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _has_bound_state(mid):
            hi = mid
        else:
            lo = mid
    kappa_star = 0.5 * (lo + hi)
    logger.info(
        "critical coupling %.6f (omega4=%g), |kappa* - 1/16| = %.2e",
        kappa_star,
        omega4,
        abs(kappa_star - CRITICAL_KAPPA),
    )
    return kappa_star


def log_omega_grid(omega_min: float, omega_max: float, points_per_decade: int) -> np.ndarray:
    """Increasing log-spaced grid, the layout used for scans and figures."""
    if not 0.0 < omega_min < omega_max < 0.5:
        raise DomainError(f"scan window must lie in (0, 1/2), got ({omega_min}, {omega_max})")
    return descending_log_grid(omega_min, omega_max, points_per_decade)[::-1]


__all__ = [
    "REALITY_TOL",
    "ScanMethod",
    "quantization_value",
    "quantization_h_special",
    "find_spectrum_exact",
    "QuantizationScan",
    "quantization_scan",
    "critical_coupling",
    "log_omega_grid",
]
