"""
Deformed solvers
----------------

Bound states of -alpha/R^2 with a minimal length: the exact
hypergeometric condition for beta = beta', the small-omega asymptotic
spectrum, momentum-space shooting for general beta, beta', the
zero-energy solution and the numerical limit checks.
"""

from .asymptotic import asymptotic_omegas, asymptotic_spectrum  # noqa: F401
from .limits import (  # noqa: F401
    LimitCheck,
    LimitReport,
    compare_general_to_special,
    ordinary_limit_deviation,
    tail_exponents,
    tail_omega,
    validate_limits,
    zero_energy_deviation,
)
from .quantization import (  # noqa: F401
    REALITY_TOL,
    QuantizationScan,
    ScanMethod,
    critical_coupling,
    find_spectrum_exact,
    log_omega_grid,
    quantization_h_special,
    quantization_scan,
    quantization_value,
)
from .roots import DEFAULT_OMEGA_MAX, DEFAULT_OMEGA_MIN, descending_log_grid, find_roots  # noqa: F401
from .shooting import (  # noqa: F401
    FIT_RESIDUAL_THRESHOLD,
    P_MAX_DEFAULT,
    ShootingResult,
    deformed_wavefunction,
    find_spectrum_general,
    heun_wavefunction,
    inward_log_derivative,
    shoot_deformed,
    shooting_tail_coefficient,
    tail_exponent,
)
from .zero_energy import physical_branch_coefficients, zero_energy_wavefunction  # noqa: F401

__all__ = [
    "asymptotic_spectrum",
    "asymptotic_omegas",
    "LimitCheck",
    "LimitReport",
    "validate_limits",
    "tail_exponents",
    "tail_omega",
    "ordinary_limit_deviation",
    "zero_energy_deviation",
    "compare_general_to_special",
    "REALITY_TOL",
    "ScanMethod",
    "QuantizationScan",
    "quantization_value",
    "quantization_h_special",
    "quantization_scan",
    "find_spectrum_exact",
    "critical_coupling",
    "log_omega_grid",
    "DEFAULT_OMEGA_MIN",
    "DEFAULT_OMEGA_MAX",
    "descending_log_grid",
    "find_roots",
    "P_MAX_DEFAULT",
    "FIT_RESIDUAL_THRESHOLD",
    "ShootingResult",
    "shoot_deformed",
    "shooting_tail_coefficient",
    "deformed_wavefunction",
    "heun_wavefunction",
    "inward_log_derivative",
    "tail_exponent",
    "find_spectrum_general",
    "zero_energy_wavefunction",
    "physical_branch_coefficients",
]
