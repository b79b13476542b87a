"""
Limit validations
-----------------

Three numerical consistency checks of the deformed solution:

- ordinary: for omega1 -> 0 the regular solution at fixed physical
  momentum is the ordinary hypergeometric wavefunction;
- tail: the large-momentum exponents are -2 and -(3 + 2 omega4);
- zero_energy: at omega -> 0 the solution is the zero-energy
  hypergeometric solution up to a fitted complex amplitude.

Failures are reported, not raised.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from common.errors import MinlenError
from deformed_model import EQUAL_BETAS_TOL, Deformation
from ordinary_qm import Coupling, wavefunction_momentum

from .quantization import find_spectrum_exact
from .roots import DEFAULT_OMEGA_MAX, DEFAULT_OMEGA_MIN
from .shooting import (
    deformed_wavefunction,
    find_spectrum_general,
    generic_inward_exponent,
    regular_log_derivative,
    tail_exponent,
)
from .zero_energy import zero_energy_wavefunction

logger = logging.getLogger(__name__)

ORDINARY_OMEGA1 = 2e-7
ORDINARY_MOMENTA = (0.5, 1.0, 2.0, 4.0)
ORDINARY_TOL = 1e-4

TAIL_LEVEL_OMEGA_MIN = 1e-4
TAIL_LEVEL_POINTS_PER_DECADE = 10
TAIL_MOMENTUM = 1e5
TAIL_TOL = 1e-3

ZERO_ENERGY_OMEGA = 1e-9
ZERO_ENERGY_FIT_XI = (0.1, 0.3)
ZERO_ENERGY_XI = (0.05, 0.2, 0.5, 0.7, 0.85)
ZERO_ENERGY_TOL = 1e-4


@dataclass(frozen=True)
class LimitCheck:
    name: str
    passed: bool
    value: float
    tolerance: float
    detail: str = ""


@dataclass(frozen=True)
class LimitReport:
    kappa: float
    omega4: float
    checks: Tuple[LimitCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> LimitCheck:
        for item in self.checks:
            if item.name == name:
                return item
        raise KeyError(name)

    def to_dict(self) -> Dict[str, object]:
        return {
            "kappa": self.kappa,
            "omega4": self.omega4,
            "passed": self.passed,
            "checks": [asdict(check) for check in self.checks],
        }


def tail_omega(kappa: float, omega4: float) -> float:
    """
    Generic omega for the tail check: the geometric midpoint between the two
    highest levels, or between the ground state and the top of the window.

    At a bound level the -2 power drops out of the regular solution, so
    the check must stay away from every level.
    """
    omega_max = DEFAULT_OMEGA_MAX
    if abs(omega4 - 0.5) <= EQUAL_BETAS_TOL:
        levels = find_spectrum_exact(
            kappa, TAIL_LEVEL_OMEGA_MIN, omega_max, 2, points_per_decade=TAIL_LEVEL_POINTS_PER_DECADE
        ).levels
    else:
        levels = find_spectrum_general(
            kappa,
            Deformation.from_omega4(1.0, omega4),
            TAIL_LEVEL_OMEGA_MIN,
            omega_max,
            2,
            points_per_decade=TAIL_LEVEL_POINTS_PER_DECADE,
        ).levels
    # levels come ground state first, largest omega first
    if len(levels) >= 2:
        upper, lower = levels[0], levels[1]
    elif levels:
        upper, lower = omega_max, levels[0]
    else:
        upper, lower = omega_max, TAIL_LEVEL_OMEGA_MIN
    omega = math.sqrt(upper * lower)
    logger.debug("tail check at omega=%.6g between levels %s", omega, levels)
    return omega


def tail_exponents(kappa: float, omega4: float) -> Tuple[float, float]:
    """
    Measured large-momentum exponents (s1, s2), expected -2 and
    -(3 + 2 omega4).

    s1 is the log-derivative of the regular solution far out, s2 comes
    from inward integration of generic data, where the faster decaying
    power dominates.
    """
    omega = tail_omega(kappa, omega4)
    s1 = regular_log_derivative(kappa, omega4, omega, TAIL_MOMENTUM)
    s2 = -generic_inward_exponent(kappa, omega4, omega)
    return s1, s2


def ordinary_limit_deviation(kappa: float, omega4: float, k: float = 1.0) -> float:
    omega1 = ORDINARY_OMEGA1
    omega = omega1 * k * k / 2.0
    momenta = np.array(ORDINARY_MOMENTA)
    deformed = deformed_wavefunction(kappa, omega4, omega, math.sqrt(omega1) * momenta)
    c = Coupling(kappa)
    ordinary = np.array([wavefunction_momentum(c, k, float(p)) for p in momenta])
    return float(np.max(np.abs(deformed - ordinary)) / np.max(np.abs(ordinary)))


def zero_energy_deviation(kappa: float, omega4: float) -> float:
    def momentum(xi: float) -> float:
        return math.sqrt(xi / (1.0 - xi))

    fit_xi = ZERO_ENERGY_FIT_XI
    basis = [zero_energy_wavefunction(kappa, omega4, xi, 1.0, 0.0) for xi in fit_xi]
    values = deformed_wavefunction(kappa, omega4, ZERO_ENERGY_OMEGA, [momentum(xi) for xi in fit_xi])
    # psi = 2 Re[A psi1] = 2 (Re A Re psi1 - Im A Im psi1)
    matrix = np.array([[2.0 * b.real, -2.0 * b.imag] for b in basis])
    amp_re, amp_im = np.linalg.solve(matrix, values)
    amplitude = complex(amp_re, amp_im)

    xis = ZERO_ENERGY_XI
    predicted = np.array(
        [2.0 * (amplitude * zero_energy_wavefunction(kappa, omega4, xi, 1.0, 0.0)).real for xi in xis]
    )
    actual = deformed_wavefunction(kappa, omega4, ZERO_ENERGY_OMEGA, [momentum(xi) for xi in xis])
    return float(np.max(np.abs(predicted - actual)) / np.max(np.abs(actual)))


def _run_check(name: str, tolerance: float, measure: Callable[[], Tuple[float, str]]) -> LimitCheck:
    try:
        value, detail = measure()
    except MinlenError as exc:
        logger.warning("limit check %s failed to evaluate: %s", name, exc)
        return LimitCheck(name=name, passed=False, value=math.nan, tolerance=tolerance, detail=str(exc))
    passed = math.isfinite(value) and value < tolerance
    if not passed:
        logger.warning("limit check %s failed: %.3e >= %.1e (%s)", name, value, tolerance, detail)
    return LimitCheck(name=name, passed=passed, value=value, tolerance=tolerance, detail=detail)


def validate_limits(kappa: float, d: Deformation, k: float = 1.0) -> LimitReport:
    Coupling(kappa).require_supercritical()
    d.require_deformed()
    omega4 = d.omega4

    def ordinary() -> Tuple[float, str]:
        value = ordinary_limit_deviation(kappa, omega4, k)
        return value, f"omega1={ORDINARY_OMEGA1:g} k={k:g} p={list(ORDINARY_MOMENTA)}"

    def tail() -> Tuple[float, str]:
        s1, s2 = tail_exponents(kappa, omega4)
        expected = tail_exponent(omega4)
        value = max(abs(s1 + 2.0), abs(s2 + expected))
        return value, f"exponents {s1:.6f}, {s2:.6f}; expected -2, {-expected:g}"

    def zero_energy() -> Tuple[float, str]:
        value = zero_energy_deviation(kappa, omega4)
        return value, f"omega={ZERO_ENERGY_OMEGA:g} xi={list(ZERO_ENERGY_XI)}"

    checks = (
        _run_check("ordinary_limit", ORDINARY_TOL, ordinary),
        _run_check("tail_exponents", TAIL_TOL, tail),
        _run_check("zero_energy", ZERO_ENERGY_TOL, zero_energy),
    )
    report = LimitReport(kappa=float(kappa), omega4=float(omega4), checks=checks)
    logger.info("limit checks kappa=%g omega4=%g: %s", kappa, omega4, "pass" if report.passed else "FAIL")
    return report


def compare_general_to_special(
    kappa: float,
    omega4: float,
    omega_min: float = DEFAULT_OMEGA_MIN,
    omega_max: float = DEFAULT_OMEGA_MAX,
    max_levels: int = 3,
    workers: Optional[int] = None,
) -> pd.DataFrame:
    """
    Levels of the general solver at ``omega4`` next to the beta = beta'
    levels; the ratio column measures how far the general spectrum
    departs from the equal-beta one beyond leading order in omega.
    """
    special = find_spectrum_exact(kappa, omega_min, omega_max, max_levels, workers=workers)
    general = find_spectrum_general(
        kappa,
        Deformation.from_omega4(1.0, omega4),
        omega_min,
        omega_max,
        max_levels,
        workers=workers,
    )
    n = min(len(special), len(general))
    rows: List[Dict[str, float]] = []
    for i in range(n):
        rows.append(
            {
                "n": special.indices[i],
                "omega_special": special.levels[i],
                "omega_general": general.levels[i],
                "ratio": general.levels[i] / special.levels[i],
            }
        )
    frame = pd.DataFrame(rows, columns=["n", "omega_special", "omega_general", "ratio"])
    if n:
        logger.info(
            "general (omega4=%g) vs equal-beta levels at kappa=%g: max |ratio - 1| = %.3e",
            omega4,
            kappa,
            float((frame["ratio"] - 1.0).abs().max()),
        )
    return frame


__all__ = [
    "LimitCheck",
    "LimitReport",
    "tail_omega",
    "tail_exponents",
    "ordinary_limit_deviation",
    "zero_energy_deviation",
    "validate_limits",
    "compare_general_to_special",
]
