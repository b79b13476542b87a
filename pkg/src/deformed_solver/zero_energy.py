"""
Zero-energy solution
--------------------

At omega = 0 the equation is hypergeometric in xi = P^2 / (1 + P^2):

    psi = (1 - xi) xi^(-5/4) [A xi^(-i nu/2) F(a, b; c; xi)
                              + B xi^(+i nu/2) F(a - c + 1, b - c + 1; 2 - c; xi)]

with the parameters of ``deformed_model.zero_energy_bundle``. For
omega4 = 1/2 both hypergeometric factors are identically 1.
"""

from __future__ import annotations

import cmath
import math
from typing import Tuple

from common.errors import DomainError
from deformed_model import dimensionless_params, zero_energy_bundle
from special_fn import Hyp2F1Params, gamma_ratio, hyp2f1


def _bundles(kappa: float, omega4: float) -> Tuple[Hyp2F1Params, Hyp2F1Params, float]:
    p = zero_energy_bundle(dimensionless_params(kappa, omega4, 0.0))
    second = Hyp2F1Params(p.a - p.c + 1.0, p.b - p.c + 1.0, 2.0 - p.c)
    nu = -p.c.imag
    return p, second, nu


def zero_energy_wavefunction(
    kappa: float,
    omega4: float,
    xi: float,
    coefA: complex,
    coefB: complex,
) -> complex:
    if xi == 0.0:
        raise DomainError("the zero-energy solution diverges at xi = 0")
    if not 0.0 < xi < 1.0:
        raise DomainError(f"xi must lie in (0, 1), got {xi}")
    first, second, nu = _bundles(kappa, omega4)
    log_xi = math.log(xi)
    value = coefA * cmath.exp(complex(-1.25, -nu / 2.0) * log_xi) * hyp2f1(first, xi)
    value += coefB * cmath.exp(complex(-1.25, nu / 2.0) * log_xi) * hyp2f1(second, xi)
    return (1.0 - xi) * value


def physical_branch_coefficients(kappa: float, omega4: float) -> Tuple[complex, complex]:
    """
    (A, B) with B = conj(A) and |A| = 1 for which the P^-2 tail cancels,
    leaving p^2 psi ~ p^-(1 + 2 omega4) as xi -> 1.

    The regular-at-one parts of the two terms carry
    Gamma(c)/(Gamma(c-a)Gamma(c-b)) and Gamma(2-c)/(Gamma(1-a)Gamma(1-b));
    their ratio has unit modulus.
    """
    p, _, _ = _bundles(kappa, omega4)
    a, b, c = p.a, p.b, p.c
    ratio = -gamma_ratio([c, 1.0 - a, 1.0 - b], [c - a, c - b, 2.0 - c])
    half_phase = cmath.phase(ratio) / 2.0
    coef_a = cmath.exp(complex(0.0, -half_phase))
    return coef_a, coef_a.conjugate()


__all__ = ["zero_energy_wavefunction", "physical_branch_coefficients"]
