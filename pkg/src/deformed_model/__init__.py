"""
Deformed model
--------------

Parameter layer of minimal-length quantum mechanics: deformation
parameters and their omega-notation, minimal lengths, the measure
exponent, and the hypergeometric / Heun parameter bundles built from
(kappa, omega4, omega).
"""

from .bundles import (  # noqa: F401
    DeformedHeunBundle,
    heun_bundle,
    heun_coefficients_in_x,
    hyp_bundle_special,
    hypergeometric_coefficients,
    nu_tilde,
    quantization_argument,
    zero_energy_bundle,
)
from .parameters import (  # noqa: F401
    EQUAL_BETAS_TOL,
    Deformation,
    OmegaParams,
    compact_variable,
    dimensionless_params,
    energy_to_omega,
    heun_variable,
    minimal_length,
    momentum_from_heun_variable,
    omega_params,
    omega_to_energy,
    weight_exponent,
)

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
    "DeformedHeunBundle",
    "nu_tilde",
    "heun_bundle",
    "hyp_bundle_special",
    "zero_energy_bundle",
    "quantization_argument",
    "hypergeometric_coefficients",
    "heun_coefficients_in_x",
]
