"""
Ordinary momentum-space wavefunction
------------------------------------

The s-wave solution regular at p = 0 is

    psi(p) = F(5/4 + i nu/2, 5/4 - i nu/2; 3/2; -p^2/k^2),   k^2 = -2mE,

normalized to psi(0) = 1. For p >> k it decays as p^(-5/2) with a
log-periodic phase:

    psi(p) ~ 2 Re[ B (p/k)^(-5/2 + i nu) ],   B = Gamma(3/2) A,
    A = Gamma(i nu) / (Gamma(5/4 + i nu/2) Gamma(1/4 + i nu/2)).

The phase of A fixes where the wavefunction has its nodes and therefore
both the cutoff spectrum and the small-omega deformed spectrum.
"""

from __future__ import annotations

import cmath
import math

from common.errors import DomainError
from special_fn import gamma_ratio, hyp2f1

from .coupling import Coupling, momentum_params


def _check_scale(k: float, p: float) -> None:
    if not k > 0.0:
        raise DomainError(f"momentum scale k must be positive, got {k}")
    if p < 0.0:
        raise DomainError(f"momentum p must be non-negative, got {p}")


def wavefunction_momentum(c: Coupling, k: float, p: float) -> float:
    _check_scale(k, p)
    x = -((p / k) ** 2)
    return hyp2f1(momentum_params(c), x).real


def phase_constant(c: Coupling) -> complex:
    """A = Gamma(i nu) / (Gamma(5/4 + i nu/2) Gamma(1/4 + i nu/2))."""
    nu = c.require_supercritical()
    return gamma_ratio([1j * nu], [1.25 + 0.5j * nu, 0.25 + 0.5j * nu])


def phase_angle(c: Coupling) -> float:
    """arg(A) on the principal branch (-pi, pi]."""
    return cmath.phase(phase_constant(c))


def tail_coefficient(c: Coupling) -> complex:
    """B = Gamma(3/2) A, the amplitude of the (p/k)^(-5/2 + i nu) tail."""
    return 0.5 * math.sqrt(math.pi) * phase_constant(c)


def wavefunction_tail(c: Coupling, k: float, p: float) -> float:
    """Leading large-p form 2 Re[B (p/k)^(-5/2 + i nu)]."""
    _check_scale(k, p)
    if p == 0.0:
        raise DomainError("the large-momentum tail is not defined at p = 0")
    nu = c.require_supercritical()
    exponent = complex(-2.5, nu)
    return 2.0 * (tail_coefficient(c) * cmath.exp(exponent * math.log(p / k))).real


__all__ = [
    "wavefunction_momentum",
    "phase_constant",
    "phase_angle",
    "tail_coefficient",
    "wavefunction_tail",
]
