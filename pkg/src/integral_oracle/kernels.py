"""
Green-function kernels
----------------------

The s-wave integral equation

    (p^2 + k^2) psi(p) = 4 kappa Int G(p, p') w(p') p'^2 psi(p') dp'

has G = 1/p_> and w = 1 in ordinary quantum mechanics. With a minimal
length, in P = sqrt(omega1) p,

    G = sqrt(omega1) g(max(P, P')),   w = (1 + P'^2)^(omega4 - 2),
    g(P) = F(-1/2, omega4; 1/2; -P^2) / P - Gamma(1/2) Gamma(1/2 + omega4) / Gamma(omega4).

For P >= 1 the same function is evaluated as

    g(P) = P^(-1 - 2 omega4) F(omega4, omega4 + 1/2; omega4 + 3/2; -1/P^2) / (1 + 2 omega4),

which avoids the cancellation between the two terms above and shows that
g decays to zero. omega4 = 0 (beta = 0) sits on the Gamma(omega4) pole:
the constant vanishes and g = 1/P.

The oracle evaluates these real-parameter functions with scipy.special,
independently of the complex-parameter code used by the primary solvers.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special

from common.errors import DomainError
from deformed_model import Deformation


def green_constant(omega4: float) -> float:
    """Gamma(1/2) Gamma(1/2 + omega4) / Gamma(omega4), zero at omega4 = 0."""
    if not 0.0 <= omega4 <= 1.0:
        raise DomainError(f"omega4 must lie in [0, 1], got {omega4}")
    if omega4 == 0.0:
        return 0.0
    return math.sqrt(math.pi) * math.exp(special.gammaln(0.5 + omega4) - special.gammaln(omega4))


def green_profile(omega4: float, p) -> np.ndarray:
    """g(P) on the unit momentum scale omega1 = 1."""
    p = np.atleast_1d(np.asarray(p, dtype=float))
    if np.any(p <= 0.0):
        raise DomainError("the Green function needs positive momenta")
    constant = green_constant(omega4)
    out = np.empty_like(p)
    inner = p < 1.0
    pi = p[inner]
    out[inner] = special.hyp2f1(-0.5, omega4, 0.5, -pi * pi) / pi - constant
    po = p[~inner]
    s = 1.0 + 2.0 * omega4
    out[~inner] = po ** (-s) * special.hyp2f1(omega4, omega4 + 0.5, omega4 + 1.5, -1.0 / (po * po)) / s
    return out


def green_kernel_deformed(d: Deformation, p: float, pprime: float) -> float:
    if not (p > 0.0 and pprime > 0.0):
        raise DomainError(f"momenta must be positive, got p={p}, p'={pprime}")
    d.require_deformed()
    scale = math.sqrt(d.omega1)
    return float(scale * green_profile(d.omega4, scale * max(p, pprime))[0])


def measure_weight(omega4: float, p) -> np.ndarray:
    """(1 + P^2)^(omega4 - 2) P^2, the integration weight of the deformed equation."""
    p = np.asarray(p, dtype=float)
    return np.power(1.0 + p * p, omega4 - 2.0) * p * p


__all__ = ["green_constant", "green_profile", "green_kernel_deformed", "measure_weight"]
