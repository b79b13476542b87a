"""
Scalar product of two ordinary bound-state candidates
-----------------------------------------------------

<psi_1 | psi_2> = int_0^oo psi_1(p) psi_2(p) p^2 dp for wavefunctions of
scales k1 and k2 (normalizations A1 = A2 = 1). In closed form

    <psi_1 | psi_2> = 2 Omega sin(nu ln r) / (nu (r^2 - 1)),   r = k1/k2,

    Omega = (1/2) k1^(5/2) k2^(1/2) Gamma(3/2)^2
            (pi nu / sinh(pi nu)) / |Gamma(5/4 + i nu/2)|^4.

Omega is kept exactly as derived, including its k1 <-> k2 asymmetry;
the zeros sin(nu ln r) = 0 do not depend on it.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy.integrate import quad

from common.errors import DomainError, IntegrationError
from special_fn import ln_gamma_complex

from .coupling import Coupling
from .wavefunction import tail_coefficient, wavefunction_momentum

LIMIT_SWITCH = 1e-4
QUAD_UPPER_FACTOR = 50.0
QUAD_LOWER_FACTOR = 1e-6
QUAD_EPSREL = 1e-10
QUAD_LIMIT = 400


def _check_scales(k1: float, k2: float) -> None:
    if not (k1 > 0.0 and k2 > 0.0):
        raise DomainError(f"momentum scales must be positive, got k1={k1}, k2={k2}")


def omega_prefactor(c: Coupling, k1: float, k2: float) -> float:
    _check_scales(k1, k2)
    nu = c.require_supercritical()
    gamma_54 = abs(cmath.exp(ln_gamma_complex(1.25 + 0.5j * nu)))
    gamma_32_sq = math.pi / 4.0
    sinh_ratio = math.pi * nu / math.sinh(math.pi * nu)
    return 0.5 * k1**2.5 * k2**0.5 * gamma_32_sq * sinh_ratio / gamma_54**4


def scalar_product_closed(c: Coupling, k1: float, k2: float) -> float:
    """
    Closed-form scalar product; at k1 = k2 the removable limit is used.

    Near r = 1 the expansion Omega (1 - x + (1/3 - nu^2/6) x^2), x = ln r,
    replaces the 0/0 quotient.
    """
    omega = omega_prefactor(c, k1, k2)
    nu = c.nu
    x = math.log(k1 / k2)
    if abs(x) < LIMIT_SWITCH:
        return omega * (1.0 - x + (1.0 / 3.0 - nu * nu / 6.0) * x * x)
    return 2.0 * omega * math.sin(nu * x) / (nu * math.expm1(2.0 * x))


def _analytic_tail(c: Coupling, k1: float, k2: float, p_cut: float) -> float:
    """int_{p_cut}^oo of the product of the two leading tails, times p^2."""
    nu = c.nu
    b = tail_coefficient(c)
    x1 = b * cmath.exp(complex(2.5, -nu) * math.log(k1))
    x2 = b * cmath.exp(complex(2.5, -nu) * math.log(k2))
    log_cut = math.log(p_cut)
    oscillating = x1 * x2 * cmath.exp(complex(-2.0, 2.0 * nu) * log_cut) / complex(2.0, -2.0 * nu)
    steady = x1 * x2.conjugate() * p_cut**-2.0 / 2.0
    return 2.0 * (oscillating + steady).real


def scalar_product_quadrature(c: Coupling, k1: float, k2: float) -> float:
    """
    Numerical scalar product: adaptive quadrature in ln p up to
    50 max(k1, k2), plus the analytic integral of the p^(-5/2) tails.
    """
    _check_scales(k1, k2)
    c.require_supercritical()
    p_lo = QUAD_LOWER_FACTOR * min(k1, k2)
    p_cut = QUAD_UPPER_FACTOR * max(k1, k2)
    epsabs = 1e-13 * (k1 * k2) ** 1.5

    def integrand(t: float) -> float:
        p = math.exp(t)
        return wavefunction_momentum(c, k1, p) * wavefunction_momentum(c, k2, p) * p**3

    # a few log-periods per piece
    edges = np.linspace(math.log(p_lo), math.log(p_cut), 12)
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        value, error = quad(integrand, lo, hi, epsabs=epsabs, epsrel=QUAD_EPSREL, limit=QUAD_LIMIT)
        if not math.isfinite(value):
            raise IntegrationError(f"scalar-product quadrature failed on [{lo}, {hi}] (error {error})")
        total += value
    return total + _analytic_tail(c, k1, k2, p_cut)


__all__ = ["omega_prefactor", "scalar_product_closed", "scalar_product_quadrature"]
