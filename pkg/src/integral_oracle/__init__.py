"""
Integral-equation oracle
------------------------

Nyström discretization of the momentum-space integral equations, with
the coupling as the eigenvalue. Spectra follow from crossings of the
coupling eigencurves and serve as an independent check of the shooting
and hypergeometric solvers.
"""

from .grids import GridMap, KernelGrid, linear_grid, log_grid, rational_grid  # noqa: F401
from .kernels import green_constant, green_kernel_deformed, green_profile, measure_weight  # noqa: F401
from .nystrom import (  # noqa: F401
    RESOLUTION_TOL,
    CouplingEigencurve,
    coupling_eigenvalues,
    cutoff_crossings,
    default_grid,
    flat_matrix,
    kernel_matrix,
    nystrom_eigencurve,
    nystrom_flat,
    oracle_crossings,
)

__all__ = [
    "GridMap",
    "KernelGrid",
    "log_grid",
    "linear_grid",
    "rational_grid",
    "green_constant",
    "green_profile",
    "green_kernel_deformed",
    "measure_weight",
    "RESOLUTION_TOL",
    "CouplingEigencurve",
    "coupling_eigenvalues",
    "cutoff_crossings",
    "default_grid",
    "flat_matrix",
    "kernel_matrix",
    "nystrom_eigencurve",
    "nystrom_flat",
    "oracle_crossings",
]
