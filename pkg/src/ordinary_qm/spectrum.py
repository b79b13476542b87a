"""
Ordinary-QM spectra
-------------------

Two ways of fixing the otherwise arbitrary bound states of -alpha/R^2:

- orthogonality: demanding that wavefunctions of different energies be
  orthogonal only fixes levels relative to one reference E1,
  E_n = E1 exp(-2 n pi / nu);
- cutoff: demanding psi(Lambda) = 0 at a momentum cutoff Lambda gives
  E_n = -(Lambda^2 / 2m) exp{(2/nu)[arg A - (n + 1/2) pi]}.

The second formula is only valid for |E_n| << Lambda^2 / 2m; levels with
factor >= ``f_valid`` are dropped.
"""

from __future__ import annotations

import logging
import math
from typing import List, Tuple

from common.errors import DomainError

from .coupling import Coupling
from .results import LevelQuantity, SpectrumMethod, SpectrumResult
from .wavefunction import phase_angle

logger = logging.getLogger(__name__)

DEFAULT_F_VALID = 0.01
MIN_NU = 1e-4


def _check_range(n_lo: int, n_hi: int) -> None:
    if n_hi < n_lo:
        raise DomainError(f"empty level range n_lo={n_lo} > n_hi={n_hi}")


def orthogonality_spectrum(c: Coupling, E1: float, n_lo: int, n_hi: int) -> SpectrumResult:
    if not E1 < 0.0:
        raise DomainError(f"reference energy E1 must be negative, got {E1}")
    _check_range(n_lo, n_hi)
    nu = c.require_supercritical()
    indices = list(range(n_lo, n_hi + 1))
    levels = [E1 * math.exp(-2.0 * n * math.pi / nu) for n in indices]
    return SpectrumResult(
        levels=tuple(levels),
        method=SpectrumMethod.ORTHOGONALITY,
        quantity=LevelQuantity.ENERGY,
        parameters={"kappa": c.kappa, "E1": E1},
        indices=tuple(indices),
    )


def level_factor(c: Coupling, n: int) -> float:
    """exp{(2/nu)[arg A - (n + 1/2) pi]}, shared by the cutoff and minimal-length spectra."""
    nu = c.require_supercritical()
    if nu < MIN_NU:
        raise DomainError(
            f"nu={nu:.3e} too close to the critical coupling for the closed-form levels; "
            "use the critical-coupling bisection instead"
        )
    return math.exp((2.0 / nu) * (phase_angle(c) - (n + 0.5) * math.pi))


def valid_level_factors(c: Coupling, n_lo: int, n_hi: int, f_valid: float) -> List[Tuple[int, float]]:
    """(n, factor) pairs with factor < f_valid, in increasing n."""
    _check_range(n_lo, n_hi)
    if not f_valid > 0.0:
        raise DomainError(f"validity fraction must be positive, got {f_valid}")
    kept = []
    for n in range(n_lo, n_hi + 1):
        factor = level_factor(c, n)
        if factor < f_valid:
            kept.append((n, factor))
    if not kept:
        logger.warning(
            "no level in n=%d..%d passes the validity filter f_valid=%g (kappa=%g)",
            n_lo,
            n_hi,
            f_valid,
            c.kappa,
        )
    return kept


def cutoff_spectrum(
    c: Coupling,
    lambda_cut: float,
    mass: float,
    n_lo: int,
    n_hi: int,
    f_valid: float = DEFAULT_F_VALID,
) -> SpectrumResult:
    """
    Bound states of the momentum-cutoff problem psi(Lambda) = 0.

    Returns
    -------
    SpectrumResult
        Energies, possibly empty when every n fails the validity filter.
    """
    if not lambda_cut > 0.0:
        raise DomainError(f"cutoff must be positive, got {lambda_cut}")
    if not mass > 0.0:
        raise DomainError(f"mass must be positive, got {mass}")
    scale = lambda_cut**2 / (2.0 * mass)
    kept = valid_level_factors(c, n_lo, n_hi, f_valid)
    return SpectrumResult(
        levels=tuple(-scale * factor for _, factor in kept),
        method=SpectrumMethod.CUTOFF,
        quantity=LevelQuantity.ENERGY,
        parameters={"kappa": c.kappa, "cutoff": lambda_cut, "mass": mass, "f_valid": f_valid},
        indices=tuple(n for n, _ in kept),
    )


__all__ = [
    "DEFAULT_F_VALID",
    "MIN_NU",
    "orthogonality_spectrum",
    "level_factor",
    "valid_level_factors",
    "cutoff_spectrum",
]
