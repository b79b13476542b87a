"""
Deformation parameters
----------------------

The deformed algebra [X_i, P_j] = i(delta_ij (1 + beta P^2) + beta' P_i P_j)
(hbar = 1) is described by beta, beta' >= 0 and a representation constant
gamma that does not affect observables. Everything the solvers need is
collected in the omega-notation:

    omega1 = beta + beta'         omega2 = beta + 2 beta'
    omega3 = 2 beta + 3 beta'     omega4 = beta / (beta + beta')
    omega  = -m (beta + beta') E  (dimensionless binding energy)

Only kappa, omega4 and omega enter the dimensionless equations; omega1
sets the momentum scale P = sqrt(omega1) p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from common.errors import ConfigError, DomainError

EQUAL_BETAS_TOL = 1e-12


@dataclass(frozen=True)
class Deformation:
    beta: float
    beta_prime: float
    gamma: float = 0.0

    def __post_init__(self) -> None:
        for name in ("beta", "beta_prime", "gamma"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ConfigError(f"deformation parameter {name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        if self.beta < 0.0 or self.beta_prime < 0.0:
            raise ConfigError(
                f"deformation parameters must be non-negative, got beta={self.beta}, "
                f"beta'={self.beta_prime}"
            )

    @classmethod
    def equal(cls, beta: float) -> "Deformation":
        return cls(beta, beta)

    @classmethod
    def from_omega4(cls, omega1: float, omega4: float) -> "Deformation":
        """Deformation with beta + beta' = omega1 and beta / (beta + beta') = omega4."""
        if not omega1 > 0.0:
            raise ConfigError(f"omega1 must be positive, got {omega1}")
        if not 0.0 <= omega4 <= 1.0:
            raise ConfigError(f"omega4 must lie in [0, 1], got {omega4}")
        return cls(omega1 * omega4, omega1 * (1.0 - omega4))

    @property
    def is_deformed(self) -> bool:
        return self.beta + self.beta_prime > 0.0

    @property
    def omega1(self) -> float:
        return self.beta + self.beta_prime

    @property
    def omega2(self) -> float:
        return self.beta + 2.0 * self.beta_prime

    @property
    def omega3(self) -> float:
        return 2.0 * self.beta + 3.0 * self.beta_prime

    @property
    def omega4(self) -> float:
        self.require_deformed()
        return self.beta / self.omega1

    @property
    def has_equal_betas(self) -> bool:
        return self.is_deformed and abs(self.omega4 - 0.5) <= EQUAL_BETAS_TOL

    def require_deformed(self) -> None:
        if not self.is_deformed:
            raise DomainError("beta + beta' = 0 is ordinary quantum mechanics; a deformation is required")


@dataclass(frozen=True)
class OmegaParams:
    omega1: float
    omega2: float
    omega3: float
    omega4: float
    omega: float
    kappa: float

    @property
    def equal_betas(self) -> bool:
        return abs(self.omega4 - 0.5) <= EQUAL_BETAS_TOL


def omega_params(d: Deformation, kappa: float, omega: float) -> OmegaParams:
    d.require_deformed()
    if not kappa > 0.0:
        raise ConfigError(f"kappa must be positive, got {kappa}")
    if not omega >= 0.0:
        raise DomainError(f"omega must be non-negative for bound states, got {omega}")
    return OmegaParams(
        omega1=d.omega1,
        omega2=d.omega2,
        omega3=d.omega3,
        omega4=d.omega4,
        omega=float(omega),
        kappa=float(kappa),
    )


def dimensionless_params(kappa: float, omega4: float, omega: float) -> OmegaParams:
    """OmegaParams on the unit momentum scale omega1 = 1."""
    return omega_params(Deformation.from_omega4(1.0, omega4), kappa, omega)


def minimal_length(d: Deformation, dim: int) -> float:
    """Minimal position uncertainty sqrt(D beta + beta') in units hbar = 1."""
    if dim < 1:
        raise ConfigError(f"dimension must be >= 1, got {dim}")
    return math.sqrt(dim * d.beta + d.beta_prime)


def weight_exponent(d: Deformation, dim: int) -> float:
    """Exponent of (1 + omega1 p^2) in the scalar-product measure, (gamma - beta'(D-1)/2) / omega1."""
    if dim < 1:
        raise ConfigError(f"dimension must be >= 1, got {dim}")
    d.require_deformed()
    return (d.gamma - d.beta_prime * (dim - 1) / 2.0) / d.omega1


def energy_to_omega(d: Deformation, mass: float, energy: float) -> float:
    if not mass > 0.0:
        raise ConfigError(f"mass must be positive, got {mass}")
    d.require_deformed()
    return -mass * d.omega1 * energy


def omega_to_energy(d: Deformation, mass: float, omega: float) -> float:
    if not mass > 0.0:
        raise ConfigError(f"mass must be positive, got {mass}")
    d.require_deformed()
    return -omega / (mass * d.omega1)


def compact_variable(omega1: float, p):
    """z(p) = (omega1 p^2 - 1) / (omega1 p^2 + 1), mapping [0, oo) onto [-1, 1)."""
    p = np.asarray(p, dtype=float)
    x = omega1 * p * p
    return (x - 1.0) / (x + 1.0)


def heun_variable(omega1: float, p):
    """xi(p) = (z + 1)/2 = omega1 p^2 / (1 + omega1 p^2), mapping [0, oo) onto [0, 1)."""
    p = np.asarray(p, dtype=float)
    x = omega1 * p * p
    return x / (1.0 + x)


def momentum_from_heun_variable(omega1: float, xi):
    xi = np.asarray(xi, dtype=float)
    return np.sqrt(xi / ((1.0 - xi) * omega1))


__all__ = [
    "EQUAL_BETAS_TOL",
    "Deformation",
    "OmegaParams",
    "omega_params",
    "dimensionless_params",
    "minimal_length",
    "weight_exponent",
    "energy_to_omega",
    "omega_to_energy",
    "compact_variable",
    "heun_variable",
    "momentum_from_heun_variable",
]
