"""
Momentum-space shooting for general beta, beta'
-----------------------------------------------

In the dimensionless momentum P = sqrt(beta + beta') p and t = ln P the
s-wave equation reads

    psi_tt = (1 - D) psi_t - Q psi,
    D = 4P^2/U + (2 + (2 + 2 omega4) P^2)/S,
    Q = P^2 [(6 + (6 + 4 omega4) P^2)/(S U) + 4 kappa/(S^2 U)],

with S = 1 + P^2 and U = P^2 + 2 omega. Near P = 0 the regular solution
is psi = 1 + c2 P^2 with c2 = -(6 + 4 kappa)/(12 omega); for P -> oo

    psi ~ C1 P^-2 + C2 P^-(3 + 2 omega4),

and bound states are the omegas where C1 vanishes.

The integrator carries u = psi e^g, w = psi_t e^g with the envelope
g = (5/4) ln(1 + P^2/(2 omega)) - (1/4) ln(1 + P^2), which removes the
P^-5/2 decay of the intermediate region and the P^-2 tail so that the
state stays O(1) over the whole range.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.integrate import solve_ivp

from common.errors import DomainError, FitDegeneracyError, IntegrationError
from deformed_model import Deformation, DeformedHeunBundle
from ordinary_qm import SpectrumMethod, SpectrumResult
from special_fn import heun_local

from .roots import (
    DEFAULT_OMEGA_MAX,
    DEFAULT_OMEGA_MIN,
    ROOT_POINTS_PER_DECADE,
    ROOT_XTOL,
    spectrum_from_function,
)

logger = logging.getLogger(__name__)

P_MAX_DEFAULT = 1e6
P_MIN_FACTOR = 1e-3
TAIL_POINTS = 64
FIT_RESIDUAL_THRESHOLD = 1e-6
ODE_RTOL = 1e-10
ODE_ATOL = 1e-12


def _check_inputs(kappa: float, omega4: float, omega: float) -> None:
    if not kappa > 0.0:
        raise DomainError(f"kappa must be positive, got {kappa}")
    if not 0.0 <= omega4 <= 1.0:
        raise DomainError(f"omega4 must lie in [0, 1], got {omega4}")
    if not omega > 0.0:
        raise DomainError(f"shooting needs omega > 0, got {omega}")


def tail_exponent(omega4: float) -> float:
    """Exponent 3 + 2 omega4 of the decaying tail P^-(3 + 2 omega4)."""
    return 3.0 + 2.0 * omega4


def _coefficients(p2: float, kappa: float, omega4: float, omega: float) -> Tuple[float, float]:
    s = 1.0 + p2
    u = p2 + 2.0 * omega
    d = 4.0 * p2 / u + (2.0 + (2.0 + 2.0 * omega4) * p2) / s
    q = p2 * ((6.0 + (6.0 + 4.0 * omega4) * p2) / (s * u) + 4.0 * kappa / (s * s * u))
    return d, q


def envelope(p, omega: float):
    p2 = np.square(p)
    return 1.25 * np.log1p(p2 / (2.0 * omega)) - 0.25 * np.log1p(p2)


def series_coefficient(kappa: float, omega: float) -> float:
    return -(6.0 + 4.0 * kappa) / (12.0 * omega)


def default_p_min(omega: float) -> float:
    return P_MIN_FACTOR * min(1.0, math.sqrt(2.0 * omega))


def _integrate_regular(kappa: float, omega4: float, omega: float, p_min: float, p_max: float):
    """Dense solution of (u, w) in t = ln P from the regular series start."""
    if not 0.0 < p_min < p_max:
        raise DomainError(f"need 0 < p_min < p_max, got ({p_min}, {p_max})")

    def rhs(t: float, y: np.ndarray) -> Tuple[float, float]:
        p2 = math.exp(2.0 * t)
        d, q = _coefficients(p2, kappa, omega4, omega)
        g_t = 2.5 * p2 / (p2 + 2.0 * omega) - 0.5 * p2 / (1.0 + p2)
        u, w = y
        return (w + g_t * u, (1.0 - d + g_t) * w - q * u)

    c2 = series_coefficient(kappa, omega)
    p2 = p_min * p_min
    e_g = math.exp(float(envelope(p_min, omega)))
    y0 = [(1.0 + c2 * p2) * e_g, 2.0 * c2 * p2 * e_g]
    sol = solve_ivp(
        rhs,
        (math.log(p_min), math.log(p_max)),
        y0,
        method="DOP853",
        rtol=ODE_RTOL,
        atol=ODE_ATOL,
        dense_output=True,
    )
    if not sol.success:
        raise IntegrationError(
            f"shooting integration failed at kappa={kappa} omega4={omega4} omega={omega}: {sol.message}"
        )
    logger.debug("shooting kappa=%g omega4=%g omega=%g took %d RHS evaluations", kappa, omega4, omega, sol.nfev)
    return sol.sol


@dataclass(frozen=True)
class ShootingResult:
    """
    Tail coefficients of the regular solution normalized by psi(0) = 1.

    ``c1`` multiplies P^-2 and ``c2`` multiplies P^-(3 + 2 omega4);
    ``fit_residual`` is the relative least-squares residual of the tail fit.
    """

    omega: float
    c1: float
    c2: float
    fit_residual: float

    @property
    def is_valid(self) -> bool:
        return self.fit_residual < FIT_RESIDUAL_THRESHOLD


def _shoot(
    kappa: float,
    omega4: float,
    omega: float,
    p_min: Optional[float] = None,
    p_max: float = P_MAX_DEFAULT,
) -> ShootingResult:
    _check_inputs(kappa, omega4, omega)
    p_min = default_p_min(omega) if p_min is None else p_min
    p_ref = p_max / 10.0
    if not p_ref > max(p_min, 1.0):
        raise DomainError(f"p_max={p_max} does not reach the tail region P >> 1")
    s2 = tail_exponent(omega4)
    if abs(s2 - 2.0) < 1e-3:
        raise FitDegeneracyError(f"tail exponents 2 and {s2} are indistinguishable")

    solution = _integrate_regular(kappa, omega4, omega, p_min, p_max)
    t_fit = np.linspace(math.log(p_ref), math.log(p_max), TAIL_POINTS)
    p_fit = np.exp(t_fit)
    g_ref = float(envelope(p_ref, omega))
    data = solution(t_fit)[0] * np.exp(g_ref - envelope(p_fit, omega))

    x = p_fit / p_ref
    design = np.column_stack([x**-2.0, x**-s2])
    coef, _, rank, _ = np.linalg.lstsq(design, data, rcond=None)
    if rank < 2:
        raise FitDegeneracyError(f"tail fit is rank deficient at omega={omega}")
    norm = float(np.linalg.norm(data))
    residual = float(np.linalg.norm(design @ coef - data)) / norm if norm > 0.0 else math.inf

    scale = math.exp(-g_ref)
    return ShootingResult(
        omega=float(omega),
        c1=float(coef[0]) * p_ref**2 * scale,
        c2=float(coef[1]) * p_ref**s2 * scale,
        fit_residual=residual,
    )


def shoot_deformed(
    kappa: float,
    d: Deformation,
    omega: float,
    p_min: Optional[float] = None,
    p_max: float = P_MAX_DEFAULT,
) -> ShootingResult:
    """
    Integrate the regular solution from ``p_min`` to ``p_max`` (both in
    units of P = sqrt(beta + beta') p) and fit the two-power tail on the
    last decade.
    """
    d.require_deformed()
    return _shoot(kappa, d.omega4, omega, p_min, p_max)


def shooting_tail_coefficient(kappa: float, omega4: float, omega: float) -> float:
    return _shoot(kappa, omega4, omega).c1


def deformed_wavefunction(kappa: float, omega4: float, omega: float, p) -> np.ndarray:
    """Regular solution psi(P) with psi(0) = 1 at the points ``p`` (units of P)."""
    _check_inputs(kappa, omega4, omega)
    p = np.atleast_1d(np.asarray(p, dtype=float))
    if np.any(p < 0.0):
        raise DomainError("momenta must be non-negative")
    p_min = default_p_min(omega)
    c2 = series_coefficient(kappa, omega)
    out = 1.0 + c2 * np.square(p)
    beyond = p > p_min
    if np.any(beyond):
        solution = _integrate_regular(kappa, omega4, omega, p_min, float(np.max(p[beyond])))
        pb = p[beyond]
        out[beyond] = solution(np.log(pb))[0] * np.exp(-envelope(pb, omega))
    return out


def heun_wavefunction(bundle: DeformedHeunBundle, p) -> np.ndarray:
    """(1 - xi) H(xi) at xi = P^2 / (1 + P^2), inside the series disc."""
    p = np.atleast_1d(np.asarray(p, dtype=float))
    xi = np.square(p) / (1.0 + np.square(p))
    return np.array([(1.0 - x) * complex(heun_local(bundle.heun, float(x))).real for x in xi])


def _integrate_plain(kappa: float, omega4: float, omega: float, p_start: float, p_end: float, y0) -> Tuple[float, float]:
    def rhs(t: float, y: np.ndarray) -> Tuple[float, float]:
        d, q = _coefficients(math.exp(2.0 * t), kappa, omega4, omega)
        return (y[1], (1.0 - d) * y[1] - q * y[0])

    sol = solve_ivp(
        rhs,
        (math.log(p_start), math.log(p_end)),
        y0,
        method="DOP853",
        rtol=ODE_RTOL,
        atol=ODE_ATOL,
    )
    if not sol.success:
        raise IntegrationError(f"integration {p_start} -> {p_end} failed: {sol.message}")
    return float(sol.y[0, -1]), float(sol.y[1, -1])


def inward_log_derivative(
    kappa: float,
    omega4: float,
    omega: float,
    p_end: float,
    p_start: float = P_MAX_DEFAULT,
) -> float:
    """
    d ln psi / d ln P at ``p_end`` for the solution that is a pure
    P^-(3 + 2 omega4) tail at ``p_start``.

    Near the origin the result tends to 0 only at bound states; elsewhere
    the P^-1 solution takes over and it tends to -1.
    """
    _check_inputs(kappa, omega4, omega)
    if not 0.0 < p_end < p_start:
        raise DomainError(f"need 0 < p_end < p_start, got ({p_end}, {p_start})")
    psi, psi_t = _integrate_plain(kappa, omega4, omega, p_start, p_end, [1.0, -tail_exponent(omega4)])
    return psi_t / psi


def generic_inward_exponent(
    kappa: float,
    omega4: float,
    omega: float,
    p_start: float = P_MAX_DEFAULT,
    p_end: float = 300.0,
) -> float:
    """-d ln psi / d ln P at ``p_end`` after inward integration from generic data psi = 1, psi_t = 0."""
    _check_inputs(kappa, omega4, omega)
    psi, psi_t = _integrate_plain(kappa, omega4, omega, p_start, p_end, [1.0, 0.0])
    return -psi_t / psi


def regular_log_derivative(kappa: float, omega4: float, omega: float, p: float) -> float:
    """d ln psi / d ln P of the regular solution at ``p``."""
    _check_inputs(kappa, omega4, omega)
    p_min = default_p_min(omega)
    solution = _integrate_regular(kappa, omega4, omega, p_min, p)
    u, w = solution(math.log(p))
    return float(w / u)


def find_spectrum_general(
    kappa: float,
    d: Deformation,
    omega_min: float = DEFAULT_OMEGA_MIN,
    omega_max: float = DEFAULT_OMEGA_MAX,
    max_levels: int = 3,
    *,
    points_per_decade: int = ROOT_POINTS_PER_DECADE,
    xtol: float = ROOT_XTOL,
    workers: Optional[int] = None,
) -> SpectrumResult:
    """Zeros of omega -> C1(omega), ground state first; residuals are |C1|."""
    d.require_deformed()
    omega4 = d.omega4
    parameters = {
        "kappa": kappa,
        "omega4": omega4,
        "omega_min": omega_min,
        "omega_max": omega_max,
        "max_levels": max_levels,
    }
    return spectrum_from_function(
        lambda omega: shooting_tail_coefficient(kappa, omega4, omega),
        kappa,
        SpectrumMethod.SHOOTING_GENERAL,
        parameters,
        omega_min,
        omega_max,
        max_levels,
        points_per_decade=points_per_decade,
        xtol=xtol,
        workers=workers,
    )


__all__ = [
    "P_MAX_DEFAULT",
    "FIT_RESIDUAL_THRESHOLD",
    "ShootingResult",
    "tail_exponent",
    "envelope",
    "series_coefficient",
    "default_p_min",
    "shoot_deformed",
    "shooting_tail_coefficient",
    "deformed_wavefunction",
    "heun_wavefunction",
    "inward_log_derivative",
    "generic_inward_exponent",
    "regular_log_derivative",
    "find_spectrum_general",
]
