"""
Special functions
-----------------

Complex log-gamma, the Gauss hypergeometric function on the whole real
line and the local Heun function (series plus ODE continuation).
"""

from __future__ import annotations

from .gamma import (  # noqa: F401
    gamma_complex,
    gamma_ratio,
    is_nonpositive_integer,
    ln_gamma_complex,
    nearest_integer,
)
from .heun import (  # noqa: F401
    HeunParams,
    heun_coefficients,
    heun_local,
    heun_local_with_derivative,
    heun_ode_eval,
    heun_second_local,
    second_solution_params,
)
from .hypergeometric import Hyp2F1Params, hyp2f1, hyp2f1_near_one  # noqa: F401

__all__ = [
    "ln_gamma_complex",
    "gamma_complex",
    "gamma_ratio",
    "nearest_integer",
    "is_nonpositive_integer",
    "Hyp2F1Params",
    "hyp2f1",
    "hyp2f1_near_one",
    "HeunParams",
    "heun_coefficients",
    "heun_local",
    "heun_local_with_derivative",
    "heun_second_local",
    "second_solution_params",
    "heun_ode_eval",
]
