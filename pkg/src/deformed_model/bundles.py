"""
Special-function parameter bundles
----------------------------------

With xi = omega1 p^2 / (1 + omega1 p^2) the bound-state wavefunction is
psi = (1 - xi) H(xi0, q; a, b, c, d, e; xi), a local Heun function with

    a, b = (3 - omega4 -+ nu~) / 2,   c = 3/2,   d = 2,   e = 1/2 - omega4,
    q = -(3/2 + kappa / (1 - 2 omega)),   xi0 = 2 omega / (2 omega - 1),
    nu~ = sqrt((omega4 - 1)^2 - 4 kappa / (1 - 2 omega)).

For beta = beta' (omega4 = 1/2) e vanishes, q = -ab, and the equation is
hypergeometric in xi/xi0. At zero energy the equation is hypergeometric
in xi for every omega4.

When a radicand is negative the root is stored as +i|root| so that
conjugate parameter pairs make every quantization function real.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from common.errors import DomainError
from special_fn import HeunParams, Hyp2F1Params

from .parameters import OmegaParams

POLE_TOL = 1e-14


def _principal_root(radicand: float) -> complex:
    if radicand >= 0.0:
        return complex(math.sqrt(radicand), 0.0)
    return complex(0.0, math.sqrt(-radicand))


def _check_bound_state(op: OmegaParams) -> None:
    if not 0.0 < op.omega < 0.5:
        if abs(op.omega - 0.5) <= POLE_TOL:
            raise DomainError("omega = 1/2 is a pole of the Heun parameters")
        raise DomainError(f"Heun bundle needs 0 < omega < 1/2, got omega={op.omega}")


def nu_tilde(op: OmegaParams) -> complex:
    if abs(1.0 - 2.0 * op.omega) <= POLE_TOL:
        raise DomainError("omega = 1/2 is a pole of nu~")
    return _principal_root((op.omega4 - 1.0) ** 2 - 4.0 * op.kappa / (1.0 - 2.0 * op.omega))


@dataclass(frozen=True)
class DeformedHeunBundle:
    heun: HeunParams
    nu_tilde: complex
    xi0: float
    q: float


def heun_bundle(op: OmegaParams) -> DeformedHeunBundle:
    _check_bound_state(op)
    nt = nu_tilde(op)
    omega4 = op.omega4
    q = -(1.5 + op.kappa / (1.0 - 2.0 * op.omega))
    xi0 = 2.0 * op.omega / (2.0 * op.omega - 1.0)
    # HeunParams verifies the Fuchsian relation on construction
    heun = HeunParams(
        xi0=xi0,
        q=q,
        a=(3.0 - omega4 - nt) / 2.0,
        b=(3.0 - omega4 + nt) / 2.0,
        c=1.5,
        d=2.0,
        e=0.5 - omega4,
    )
    return DeformedHeunBundle(heun=heun, nu_tilde=nt, xi0=xi0, q=q)


def hyp_bundle_special(op: OmegaParams) -> Hyp2F1Params:
    """Gauss parameters (5/4 - nu~/2, 5/4 + nu~/2, 3/2) of the beta = beta' case."""
    if not op.equal_betas:
        raise DomainError(f"the hypergeometric reduction needs omega4 = 1/2, got {op.omega4}")
    nt = nu_tilde(op)
    return Hyp2F1Params(1.25 - nt / 2.0, 1.25 + nt / 2.0, 1.5)


def zero_energy_bundle(op: OmegaParams) -> Hyp2F1Params:
    """
    Gauss parameters of the zero-energy solution,

        a, b = 1/4 - omega4/2 -+ mu/2 - i nu/2,   c = 1 - i nu,
        mu = sqrt((omega4 - 1)^2 - 4 kappa),   nu = sqrt(4 kappa - 1/4).
    """
    nu_sq = 4.0 * op.kappa - 0.25
    if not nu_sq > 0.0:
        raise DomainError(f"zero-energy solution needs kappa > 1/16, got {op.kappa}")
    nu = math.sqrt(nu_sq)
    mu = _principal_root((op.omega4 - 1.0) ** 2 - 4.0 * op.kappa)
    base = complex(0.25 - op.omega4 / 2.0, 0.0)
    half_nu = complex(0.0, nu / 2.0)
    return Hyp2F1Params(base - mu / 2.0 - half_nu, base + mu / 2.0 - half_nu, complex(1.0, -nu))


def quantization_argument(op: OmegaParams) -> float:
    """1/xi0 = (2 omega - 1) / (2 omega), the argument of the beta = beta' condition."""
    _check_bound_state(op)
    return (2.0 * op.omega - 1.0) / (2.0 * op.omega)


def hypergeometric_coefficients(op: OmegaParams, x: float) -> Tuple[float, float]:
    """
    (P, Q) of F'' + P F' + Q F = 0 for the beta = beta' equation written in
    x = xi / xi0, i.e. the Gauss equation for ``hyp_bundle_special``.
    """
    p = hyp_bundle_special(op)
    s = (p.a + p.b).real
    ab = (p.a * p.b).real
    return ((p.c.real - (s + 1.0) * x) / (x * (1.0 - x)), -ab / (x * (1.0 - x)))


def heun_coefficients_in_x(bundle: DeformedHeunBundle, x: float) -> Tuple[float, float]:
    """
    (P, Q) of the Heun equation of ``bundle`` rewritten in x = xi / xi0.
    """
    h = bundle.heun
    xi0 = h.xi0
    xi = xi0 * x
    ab = (h.a * h.b).real
    friction = h.c / xi + h.e / (xi - 1.0) + h.d / (xi - xi0)
    potential = (ab * xi + h.q) / (xi * (xi - 1.0) * (xi - xi0))
    return (friction * xi0, potential * xi0 * xi0)


__all__ = [
    "DeformedHeunBundle",
    "nu_tilde",
    "heun_bundle",
    "hyp_bundle_special",
    "zero_energy_bundle",
    "quantization_argument",
    "hypergeometric_coefficients",
    "heun_coefficients_in_x",
]
