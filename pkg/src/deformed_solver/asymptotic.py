"""
Small-omega spectrum
--------------------

For omega << 1 the quantization condition reduces to

    E_n = -(1 / (2 m (beta + beta'))) exp{(2/nu)[arg A - (n + 1/2) pi]},

the cutoff spectrum of ordinary quantum mechanics with
Lambda^2 = 1 / (beta + beta'). In omega units omega_n = factor_n / 2.
Only levels with factor < f_valid are kept.
"""

from __future__ import annotations

from common.errors import ConfigError
from deformed_model import Deformation
from ordinary_qm import (
    DEFAULT_F_VALID,
    Coupling,
    LevelQuantity,
    SpectrumMethod,
    SpectrumResult,
    valid_level_factors,
)


def asymptotic_spectrum(
    kappa: float,
    d: Deformation,
    mass: float,
    n_lo: int,
    n_hi: int,
    f_valid: float = DEFAULT_F_VALID,
) -> SpectrumResult:
    d.require_deformed()
    if not mass > 0.0:
        raise ConfigError(f"mass must be positive, got {mass}")
    c = Coupling(kappa)
    scale = 1.0 / (2.0 * mass * d.omega1)
    kept = valid_level_factors(c, n_lo, n_hi, f_valid)
    return SpectrumResult(
        levels=tuple(-scale * factor for _, factor in kept),
        method=SpectrumMethod.ASYMPTOTIC_DEFORMED,
        quantity=LevelQuantity.ENERGY,
        parameters={
            "kappa": kappa,
            "beta": d.beta,
            "beta_prime": d.beta_prime,
            "mass": mass,
            "f_valid": f_valid,
        },
        indices=tuple(n for n, _ in kept),
    )


def asymptotic_omegas(
    kappa: float,
    n_lo: int,
    n_hi: int,
    f_valid: float = DEFAULT_F_VALID,
) -> SpectrumResult:
    """The same levels as dimensionless omegas, omega_n = factor_n / 2."""
    kept = valid_level_factors(Coupling(kappa), n_lo, n_hi, f_valid)
    return SpectrumResult(
        levels=tuple(0.5 * factor for _, factor in kept),
        method=SpectrumMethod.ASYMPTOTIC_DEFORMED,
        quantity=LevelQuantity.OMEGA,
        parameters={"kappa": kappa, "f_valid": f_valid},
        indices=tuple(n for n, _ in kept),
    )


__all__ = ["asymptotic_spectrum", "asymptotic_omegas"]
