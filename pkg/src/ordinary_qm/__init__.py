"""
Ordinary quantum mechanics
--------------------------

The undeformed -alpha/R^2 problem in momentum space: regular solution,
large-momentum tail, scalar products, and the two spectra one can assign
to it (orthogonality and momentum cutoff).
"""

from .coupling import CRITICAL_KAPPA, Coupling, momentum_params  # noqa: F401
from .green import characteristic_residual, characteristic_roots, green_kernel_flat  # noqa: F401
from .results import LevelQuantity, SpectrumMethod, SpectrumResult  # noqa: F401
from .scalar_product import (  # noqa: F401
    omega_prefactor,
    scalar_product_closed,
    scalar_product_quadrature,
)
from .spectrum import (  # noqa: F401
    DEFAULT_F_VALID,
    MIN_NU,
    cutoff_spectrum,
    level_factor,
    orthogonality_spectrum,
    valid_level_factors,
)
from .wavefunction import (  # noqa: F401
    phase_angle,
    phase_constant,
    tail_coefficient,
    wavefunction_momentum,
    wavefunction_tail,
)

__all__ = [
    "CRITICAL_KAPPA",
    "Coupling",
    "momentum_params",
    "characteristic_roots",
    "characteristic_residual",
    "green_kernel_flat",
    "SpectrumMethod",
    "LevelQuantity",
    "SpectrumResult",
    "omega_prefactor",
    "scalar_product_closed",
    "scalar_product_quadrature",
    "DEFAULT_F_VALID",
    "MIN_NU",
    "orthogonality_spectrum",
    "level_factor",
    "valid_level_factors",
    "cutoff_spectrum",
    "wavefunction_momentum",
    "phase_constant",
    "phase_angle",
    "tail_coefficient",
    "wavefunction_tail",
]
