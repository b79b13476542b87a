"""
Local Heun function
-------------------

Canonical Heun equation with singular points {0, 1, xi0, oo}

    f'' + (c/xi + e/(xi - 1) + d/(xi - xi0)) f'
        + (a*b*xi + q) / (xi (xi - 1) (xi - xi0)) f = 0,

with the Fuchsian constraint a + b + 1 = c + d + e. Note the sign of the
accessory parameter: ``q`` here is minus the DLMF accessory parameter.

The local solution regular at 0 (normalized to 1) is summed from the
three-term coefficient recurrence inside |xi| < min(1, |xi0|); outside
the disc (or as a cross-check) the ODE is continued with an adaptive
8th-order Runge-Kutta pair.

When a and b are a complex-conjugate pair, a + b and a*b are real and
so are all coefficients; only a genuinely complex parameter set makes
the values complex.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np
from scipy.integrate import solve_ivp

from common.errors import (
    DomainError,
    IntegrationError,
    NonConvergenceError,
    ParameterPoleError,
    SingularityProximityError,
)

from .gamma import is_nonpositive_integer
from .hypergeometric import DEFAULT_TOL, MAX_TERMS

logger = logging.getLogger(__name__)

FUCHSIAN_TOL = 1e-12
REALITY_TOL = 1e-14
DEFAULT_SINGULAR_MARGIN = 1e-3
DEFAULT_ODE_RTOL = 1e-10
DEFAULT_ODE_ATOL = 1e-12

Number = Union[float, complex]


@dataclass(frozen=True)
class HeunParams:
    xi0: float
    q: float
    a: complex
    b: complex
    c: float
    d: float
    e: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "xi0", float(self.xi0))
        object.__setattr__(self, "q", float(self.q))
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        object.__setattr__(self, "c", float(self.c))
        object.__setattr__(self, "d", float(self.d))
        object.__setattr__(self, "e", float(self.e))
        if self.xi0 in (0.0, 1.0):
            raise DomainError(f"Heun singular point xi0={self.xi0} collides with 0 or 1")
        if is_nonpositive_integer(self.c):
            raise ParameterPoleError(f"Heun parameter c={self.c} is a nonpositive integer")
        scale = max(1.0, abs(self.a) + abs(self.b) + abs(self.c) + abs(self.d) + abs(self.e))
        if abs(self.fuchsian_residual) > FUCHSIAN_TOL * scale:
            raise DomainError(
                f"Fuchsian relation a+b+1=c+d+e violated (residual {self.fuchsian_residual:.3e})"
            )

    @property
    def fuchsian_residual(self) -> complex:
        return self.a + self.b + 1.0 - self.c - self.d - self.e

    @property
    def sum_ab(self) -> complex:
        return self.a + self.b

    @property
    def product_ab(self) -> complex:
        return self.a * self.b

    @property
    def is_real(self) -> bool:
        s, p = self.sum_ab, self.product_ab
        return abs(s.imag) <= REALITY_TOL * max(1.0, abs(s)) and abs(p.imag) <= REALITY_TOL * max(
            1.0, abs(p)
        )

    def disc_radius(self) -> float:
        return min(1.0, abs(self.xi0))


def _recurrence_inputs(p: HeunParams) -> Tuple[Number, Number]:
    if p.is_real:
        return p.sum_ab.real, p.product_ab.real
    return p.sum_ab, p.product_ab


def _next_coefficient(p: HeunParams, n: int, c_mid: Number, c_low: Number, s: Number, ab: Number) -> Number:
    """C_{n+2} from C_{n+1} (c_mid) and C_n (c_low)."""
    m = n + 1
    middle = m * m * (p.xi0 + 1.0) + m * (p.c + p.d - 1.0 + (s - p.d) * p.xi0) - p.q
    low = n * n + n * s + ab
    return (middle * c_mid - low * c_low) / ((n + 2) * (n + 1 + p.c) * p.xi0)


def heun_coefficients(p: HeunParams, n_max: int) -> np.ndarray:
    """
    Coefficients C_0..C_{n_max} of the local Heun series at xi = 0.

    C_0 = 1, C_1 = -q/(c*xi0); the rest follow the three-term recurrence.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    s, ab = _recurrence_inputs(p)
    dtype = float if p.is_real else complex
    coeffs = np.zeros(n_max + 1, dtype=dtype)
    coeffs[0] = 1.0
    coeffs[1] = -p.q / (p.c * p.xi0)
    for n in range(n_max - 1):
        coeffs[n + 2] = _next_coefficient(p, n, coeffs[n + 1], coeffs[n], s, ab)
    return coeffs


def _local_series(p: HeunParams, xi: float, tol: float, max_terms: int) -> Tuple[Number, Number]:
    xi = float(xi)
    radius = p.disc_radius()
    if abs(xi) >= radius:
        raise DomainError(f"xi={xi} outside the Heun series disc |xi| < {radius}")
    s, ab = _recurrence_inputs(p)
    c_low: Number = 1.0
    c_mid: Number = -p.q / (p.c * p.xi0)
    value: Number = 1.0 + c_mid * xi
    slope: Number = c_mid
    power = xi  # xi**(n+1) for the current c_mid
    previous_small = abs(c_mid * xi) <= tol * abs(value)
    for n in range(max_terms):
        c_next = _next_coefficient(p, n, c_mid, c_low, s, ab)
        slope += (n + 2) * c_next * power
        power *= xi
        term = c_next * power
        value += term
        small = abs(term) <= tol * abs(value)
        if small and previous_small:
            return value, slope
        previous_small = small
        c_low, c_mid = c_mid, c_next
    raise NonConvergenceError(f"Heun series at xi={xi} did not converge in {max_terms} terms")


def heun_local(p: HeunParams, xi: float, tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS) -> Number:
    """Local Heun function regular at 0, H(0) = 1, summed inside its disc."""
    value, _ = _local_series(p, xi, tol, max_terms)
    return value


def heun_local_with_derivative(
    p: HeunParams,
    xi: float,
    tol: float = DEFAULT_TOL,
    max_terms: int = MAX_TERMS,
) -> Tuple[Number, Number]:
    return _local_series(p, xi, tol, max_terms)


def second_solution_params(p: HeunParams) -> HeunParams:
    """Parameters of the Heun function inside the second local solution xi**(1-c) H(...)."""
    return HeunParams(
        xi0=p.xi0,
        q=p.q + (p.c - 1.0) * (p.xi0 * p.e + p.d),
        a=p.a - p.c + 1.0,
        b=p.b - p.c + 1.0,
        c=2.0 - p.c,
        d=p.d,
        e=p.e,
    )


def heun_second_local(
    p: HeunParams,
    xi: float,
    tol: float = DEFAULT_TOL,
    max_terms: int = MAX_TERMS,
) -> Tuple[Number, Number]:
    """
    Second local solution at 0, xi**(1-c) H(xi0, q'; a-c+1, b-c+1, 2-c, d; xi).

    Returns the value and its derivative; defined for 0 < xi inside the disc.
    """
    if not xi > 0.0:
        raise DomainError(f"second local Heun solution needs xi > 0, got {xi}")
    shifted = second_solution_params(p)
    h, dh = _local_series(shifted, xi, tol, max_terms)
    exponent = 1.0 - p.c
    factor = xi**exponent
    return factor * h, factor * (exponent * h / xi + dh)


def _path_distance(point: float, lo: float, hi: float) -> float:
    if lo <= point <= hi:
        return 0.0
    return min(abs(point - lo), abs(point - hi))


def heun_ode_eval(
    p: HeunParams,
    xi_start: float,
    f_start: Number,
    fprime_start: Number,
    xi_end: float,
    *,
    rtol: float = DEFAULT_ODE_RTOL,
    atol: float = DEFAULT_ODE_ATOL,
    singular_margin: float = DEFAULT_SINGULAR_MARGIN,
) -> Tuple[Number, Number]:
    """
    Continue (f, f') of the Heun equation from ``xi_start`` to ``xi_end``.

    Raises
    ------
    SingularityProximityError
        If the segment passes within ``singular_margin`` of 0, 1 or xi0.
    IntegrationError
        If the integrator fails.
    """
    if xi_end == xi_start:
        return f_start, fprime_start

    lo, hi = sorted((float(xi_start), float(xi_end)))
    for point in (0.0, 1.0, p.xi0):
        if _path_distance(point, lo, hi) < singular_margin:
            raise SingularityProximityError(
                f"path [{lo}, {hi}] passes within {singular_margin} of singular point {point}"
            )

    _, ab = _recurrence_inputs(p)
    xi0, c, d, e, q = p.xi0, p.c, p.d, p.e, p.q

    def rhs(xi: float, y: np.ndarray) -> np.ndarray:
        f, fp = y
        friction = c / xi + e / (xi - 1.0) + d / (xi - xi0)
        potential = (ab * xi + q) / (xi * (xi - 1.0) * (xi - xi0))
        return np.array([fp, -friction * fp - potential * f])

    is_complex = isinstance(ab, complex) or isinstance(f_start, complex) or isinstance(fprime_start, complex)
    y0 = np.array([f_start, fprime_start], dtype=complex if is_complex else float)
    sol = solve_ivp(rhs, (xi_start, xi_end), y0, method="DOP853", rtol=rtol, atol=atol)
    if not sol.success:
        raise IntegrationError(f"Heun ODE continuation {xi_start} -> {xi_end} failed: {sol.message}")
    f_end, fp_end = sol.y[:, -1]
    logger.debug("Heun continuation %s -> %s took %d RHS evaluations", xi_start, xi_end, sol.nfev)
    if is_complex:
        return complex(f_end), complex(fp_end)
    return float(f_end), float(fp_end)


__all__ = [
    "FUCHSIAN_TOL",
    "DEFAULT_SINGULAR_MARGIN",
    "DEFAULT_ODE_RTOL",
    "HeunParams",
    "heun_coefficients",
    "heun_local",
    "heun_local_with_derivative",
    "second_solution_params",
    "heun_second_local",
    "heun_ode_eval",
]
