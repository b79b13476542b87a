"""
Integral form of the ordinary problem
-------------------------------------

(p^2 + k^2) psi(p) = 4 kappa * int_0^oo G(p, p') p'^2 psi(p') dp'

with G(p, p') = 1/max(p, p'). A power law p^s solves it for large p
exactly when 1 = 4 kappa [1/(s+3) - 1/(s+2)], i.e. s^2 + 5 s + 6 + 4 kappa = 0.
"""

from __future__ import annotations

import cmath
from typing import Tuple

from common.errors import DomainError

from .coupling import Coupling


def characteristic_roots(c: Coupling) -> Tuple[complex, complex]:
    """Roots s = -5/2 -+ sqrt(1 - 16 kappa)/2, returned as (lower branch, upper branch)."""
    half_width = 0.5 * cmath.sqrt(complex(1.0 - 16.0 * c.kappa, 0.0))
    return complex(-2.5) - half_width, complex(-2.5) + half_width


def characteristic_residual(c: Coupling, s: complex) -> complex:
    """4 kappa [1/(s+3) - 1/(s+2)] - 1; zero at a characteristic root."""
    return 4.0 * c.kappa * (1.0 / (s + 3.0) - 1.0 / (s + 2.0)) - 1.0


def green_kernel_flat(p: float, pprime: float) -> float:
    if not (p > 0.0 and pprime > 0.0):
        raise DomainError(f"flat Green function needs p, p' > 0, got ({p}, {pprime})")
    return 1.0 / max(p, pprime)


__all__ = ["characteristic_roots", "characteristic_residual", "green_kernel_flat"]
