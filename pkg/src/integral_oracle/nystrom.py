"""
Nyström eigencurves
-------------------

For fixed binding the integral equation is linear in lambda = 4 kappa:

    (P^2 + 2 omega) psi(P) = lambda Int g(P_>) w(P') P'^2 psi(P') dP'.

On a quadrature grid (P_i, w_i) this is the generalized eigenproblem
D psi = lambda G M W psi with diagonal D, M, W. Conjugating by
sqrt(D M W) turns it into the symmetric problem

    K phi = mu phi,   K_ij = r_i g(max(P_i, P_j)) r_j,   r_i = sqrt(w_i m_i / d_i),

with mu = 1 / lambda. The largest mu give the smallest couplings that
bind at this omega, so each omega yields an ascending list of couplings
kappa_n(omega) = 1 / (4 mu_n). A bound state of coupling kappa sits where
the n-th curve crosses kappa.

The ordinary kernel 1/p_> has no scale: every k > 0 gives the same
eigenvalues, which is the missing quantization of the unregularized
problem. A hard cutoff Lambda (kernel 1/p_> - 1/Lambda, psi(Lambda) = 0)
restores it.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy.linalg import LinAlgError, eigh
from scipy.optimize import brentq

from common.errors import DomainError, SolverError
from common.parallel import ordered_map
from deformed_model import Deformation
from ordinary_qm import CRITICAL_KAPPA, LevelQuantity, SpectrumMethod, SpectrumResult

from .grids import GridMap, KernelGrid, log_grid
from .kernels import green_profile, measure_weight

logger = logging.getLogger(__name__)

RESOLUTION_TOL = 1e-3
DEFAULT_P_MIN = 1e-6
DEFAULT_P_MAX = 1e3
DEFAULT_POINTS_PER_DECADE = 40
ORACLE_SAMPLES_PER_DECADE = 10
ORACLE_OMEGA_MIN = 1e-4
ORACLE_OMEGA_MAX = 0.499
CROSSING_XTOL = 1e-10
CUTOFF_DEPTH = 1e-8
CUTOFF_K_MIN_FACTOR = 1e-4
CUTOFF_SAMPLES_PER_DECADE = 8


def default_grid() -> KernelGrid:
    """Log grid on P in [1e-6, 1e3], in units of the deformation scale."""
    return log_grid(DEFAULT_P_MIN, DEFAULT_P_MAX, DEFAULT_POINTS_PER_DECADE)


def _max_index_matrix(values: np.ndarray) -> np.ndarray:
    # nodes are increasing, so max(P_i, P_j) is the node with the larger index
    idx = np.arange(values.size)
    return values[np.maximum.outer(idx, idx)]


def kernel_matrix(grid: KernelGrid, omega4: float, omega: float) -> np.ndarray:
    """Symmetrized deformed operator K on a grid in P = sqrt(omega1) p."""
    if not omega > 0.0:
        raise DomainError(f"omega must be positive, got {omega}")
    p = grid.nodes
    g = _max_index_matrix(green_profile(omega4, p))
    r = np.sqrt(grid.weights * measure_weight(omega4, p) / (p * p + 2.0 * omega))
    return r[:, None] * g * r[None, :]


def flat_matrix(k: float, grid: KernelGrid, cutoff: Optional[float] = None) -> np.ndarray:
    """Symmetrized ordinary operator, optionally with the Dirichlet cutoff."""
    if not k > 0.0:
        raise DomainError(f"k must be positive, got {k}")
    p = grid.nodes
    profile = 1.0 / p
    if cutoff is not None:
        if not cutoff > 0.0:
            raise DomainError(f"cutoff must be positive, got {cutoff}")
        if grid.p_max > cutoff * (1.0 + 1e-12):
            raise DomainError(f"grid reaches p={grid.p_max:g} beyond the cutoff {cutoff:g}")
        profile = profile - 1.0 / cutoff
    r = np.sqrt(grid.weights * p * p / (p * p + k * k))
    return r[:, None] * _max_index_matrix(profile) * r[None, :]


def _largest_eigenvalues(matrix: np.ndarray, n_eigs: int) -> np.ndarray:
    """The n_eigs largest eigenvalues of a symmetric matrix, descending."""
    n = matrix.shape[0]
    if not 1 <= n_eigs <= n:
        raise DomainError(f"n_eigs must lie in [1, {n}], got {n_eigs}")
    try:
        mu = eigh(matrix, eigvals_only=True, subset_by_index=[n - n_eigs, n - 1])
    except LinAlgError as exc:
        raise SolverError(f"symmetric eigensolve failed: {exc}") from exc
    mu = mu[::-1]
    if not np.all(np.isfinite(mu)) or mu[-1] <= 0.0:
        raise SolverError(f"kernel eigenvalues are not finite and positive: {mu}")
    return mu


def coupling_eigenvalues(grid: KernelGrid, omega4: float, omega: float, n_eigs: int) -> np.ndarray:
    """The n_eigs smallest couplings kappa that bind at omega, ascending."""
    return 0.25 / _largest_eigenvalues(kernel_matrix(grid, omega4, omega), n_eigs)


def nystrom_flat(
    kappa: float,
    k: float,
    grid: KernelGrid,
    n_eigs: Optional[int] = 4,
    cutoff: Optional[float] = None,
) -> List[float]:
    """
    Eigenvalues lambda_n <= 4 kappa of the ordinary integral equation at fixed k, ascending.

    lambda_n(k) grows with k, so the number of eigenvalues at or below
    4 kappa is the number of levels of coupling kappa with momentum at
    least k. With a cutoff that count is finite; without one, 4 kappa is
    attained for every k once the grid is long enough and the list
    barely moves with k. ``n_eigs`` caps the list, None keeps them all.
    """
    if not kappa > 0.0:
        raise DomainError(f"kappa must be positive, got {kappa}")
    if n_eigs is not None and n_eigs < 1:
        raise DomainError(f"n_eigs must be >= 1, got {n_eigs}")
    matrix = flat_matrix(k, grid, cutoff)
    try:
        mu = eigh(matrix, eigvals_only=True, subset_by_value=[0.25 / kappa * (1.0 - 1e-12), np.inf])
    except LinAlgError as exc:
        raise SolverError(f"symmetric eigensolve failed: {exc}") from exc
    if not np.all(np.isfinite(mu)):
        raise SolverError(f"kernel eigenvalues are not finite: {mu}")
    lam = np.sort(1.0 / mu)
    if n_eigs is not None:
        lam = lam[:n_eigs]
    logger.debug("flat kernel at k=%g: %d eigenvalues at or below 4 kappa=%g", k, lam.size, 4.0 * kappa)
    return [float(x) for x in lam]


@dataclass(frozen=True)
class CouplingEigencurve:
    omega_samples: Tuple[float, ...]
    kappa_eigenvalues: Tuple[Tuple[float, ...], ...]

    def __post_init__(self) -> None:
        omegas = tuple(float(w) for w in self.omega_samples)
        rows = tuple(tuple(float(x) for x in row) for row in self.kappa_eigenvalues)
        if len(rows) != len(omegas):
            raise DomainError(f"{len(rows)} eigenvalue lists for {len(omegas)} omega samples")
        for omega, row in zip(omegas, rows):
            if not all(math.isfinite(x) for x in row):
                raise DomainError(f"non-finite coupling eigenvalue at omega={omega}")
            if any(lo > hi for lo, hi in zip(row, row[1:])):
                raise DomainError(f"coupling eigenvalues at omega={omega} are not ascending")
        object.__setattr__(self, "omega_samples", omegas)
        object.__setattr__(self, "kappa_eigenvalues", rows)

    @property
    def n_eigs(self) -> int:
        return min((len(row) for row in self.kappa_eigenvalues), default=0)

    def curve(self, n: int) -> np.ndarray:
        """kappa_n(omega) over the samples."""
        if not 0 <= n < self.n_eigs:
            raise DomainError(f"curve index must lie in [0, {self.n_eigs}), got {n}")
        return np.array([row[n] for row in self.kappa_eigenvalues])

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame({"omega": list(self.omega_samples)})
        for n in range(self.n_eigs):
            frame[f"kappa_{n}"] = self.curve(n)
        return frame


def _relative_shift(coarse: np.ndarray, fine: np.ndarray) -> float:
    return float(np.max(np.abs(fine - coarse) / np.abs(fine)))


def nystrom_eigencurve(
    d: Deformation,
    omega_samples: Sequence[float],
    grid: Optional[KernelGrid] = None,
    n_eigs: int = 2,
    *,
    workers: Optional[int] = None,
    check_resolution: bool = True,
) -> CouplingEigencurve:
    """
    Coupling eigenvalues kappa_n(omega) of the deformed integral equation.

    The grid is in P = sqrt(omega1) p; only omega4 of the deformation
    enters. With ``check_resolution`` every sample is also solved on the
    refined grid and a warning is logged when the couplings move by more
    than 0.1%.
    """
    d.require_deformed()
    omega4 = d.omega4
    omegas = sorted(float(w) for w in omega_samples)
    if not omegas:
        raise DomainError("no omega samples")
    if omegas[0] <= 0.0:
        raise DomainError(f"omega samples must be positive, got {omegas[0]}")
    grid = grid or default_grid()
    fine = grid.refined() if check_resolution else None

    def solve(omega: float) -> Tuple[np.ndarray, float]:
        coarse = coupling_eigenvalues(grid, omega4, omega, n_eigs)
        if fine is None:
            return coarse, 0.0
        return coarse, _relative_shift(coarse, coupling_eigenvalues(fine, omega4, omega, n_eigs))

    solved = ordered_map(solve, omegas, workers)
    shift = max(s for _, s in solved)
    if shift > RESOLUTION_TOL:
        logger.warning(
            "resolution: coupling eigenvalues move by %.3g under grid doubling (tolerance %g)",
            shift,
            RESOLUTION_TOL,
        )
    logger.info("eigencurve: %d omega samples, %d curves, omega4=%g", len(omegas), n_eigs, omega4)
    return CouplingEigencurve(tuple(omegas), tuple(tuple(row) for row, _ in solved))


def _extrapolated(grid: KernelGrid, omega4: float, n_eigs: int):
    """kappa_n(omega) extrapolated from the grid and its refinement, plus the doubling shift."""
    fine = grid.refined()
    second_order = grid.map is not GridMap.RATIONAL

    def evaluate(omega: float) -> Tuple[np.ndarray, float]:
        coarse = coupling_eigenvalues(grid, omega4, omega, n_eigs)
        refined = coupling_eigenvalues(fine, omega4, omega, n_eigs)
        value = (4.0 * refined - coarse) / 3.0 if second_order else refined
        return value, _relative_shift(coarse, refined)

    return evaluate


def _log_samples(lo: float, hi: float, per_decade: int) -> np.ndarray:
    """Descending log-spaced samples from hi to lo."""
    n = max(2, int(math.ceil(math.log10(hi / lo) * per_decade)) + 1)
    return np.geomspace(hi, lo, n)


def _first_crossing(values: np.ndarray, target: float) -> Optional[int]:
    """Index i with values[i] - target and values[i + 1] - target of opposite sign."""
    diff = values - target
    for i in range(diff.size - 1):
        if diff[i] == 0.0 or diff[i] * diff[i + 1] < 0.0:
            return i
    return None


def oracle_crossings(
    kappa: float,
    omega4: float,
    n_levels: int = 2,
    *,
    omega_min: float = ORACLE_OMEGA_MIN,
    omega_max: float = ORACLE_OMEGA_MAX,
    grid: Optional[KernelGrid] = None,
    samples_per_decade: int = ORACLE_SAMPLES_PER_DECADE,
    workers: Optional[int] = None,
) -> SpectrumResult:
    """
    Bound-state omegas from the crossings kappa_n(omega) = kappa.

    Couplings are Richardson-extrapolated from the grid and its
    refinement; the residual of each level is the relative shift of the
    couplings under grid doubling at the crossing.
    """
    if not 0.0 < omega_min < omega_max:
        raise DomainError(f"omega window must satisfy 0 < omega_min < omega_max, got ({omega_min}, {omega_max})")
    if n_levels < 1:
        raise DomainError(f"n_levels must be >= 1, got {n_levels}")
    if not 0.0 <= omega4 <= 1.0:
        raise DomainError(f"omega4 must lie in [0, 1], got {omega4}")
    grid = grid or default_grid()
    parameters = {
        "kappa": kappa,
        "omega4": omega4,
        "omega_min": omega_min,
        "omega_max": omega_max,
        "nodes": float(len(grid)),
    }
    if not kappa > CRITICAL_KAPPA:
        logger.info("kappa=%g <= 1/16: no bound states, returning an empty oracle spectrum", kappa)
        return SpectrumResult(levels=(), method=SpectrumMethod.ORACLE, quantity=LevelQuantity.OMEGA, parameters=parameters)

    evaluate = _extrapolated(grid, omega4, n_levels)
    samples = _log_samples(omega_min, omega_max, samples_per_decade)
    table = np.array([row for row, _ in ordered_map(evaluate, [float(w) for w in samples], workers)])

    levels: List[float] = []
    shifts: List[float] = []
    for n in range(n_levels):
        i = _first_crossing(table[:, n], kappa)
        if i is None:
            logger.warning(
                "bracket exhaustion: %d of %d oracle levels found above omega_min=%g",
                n,
                n_levels,
                omega_min,
            )
            break
        hi, lo = float(samples[i]), float(samples[i + 1])
        log_root = brentq(
            lambda s, n=n: evaluate(math.exp(s))[0][n] - kappa,
            math.log(lo),
            math.log(hi),
            xtol=CROSSING_XTOL,
        )
        omega = math.exp(log_root)
        shift = evaluate(omega)[1]
        if shift > RESOLUTION_TOL:
            logger.warning("resolution: level %d moves by %.3g under grid doubling", n, shift)
        levels.append(omega)
        shifts.append(shift)

    logger.info("oracle: %d levels for kappa=%g, omega4=%g", len(levels), kappa, omega4)
    return SpectrumResult(
        levels=tuple(levels),
        method=SpectrumMethod.ORACLE,
        quantity=LevelQuantity.OMEGA,
        parameters=parameters,
        residuals=tuple(shifts),
    )


def cutoff_crossings(
    kappa: float,
    cutoff: float,
    n_levels: int = 2,
    *,
    points_per_decade: int = 32,
    samples_per_decade: int = CUTOFF_SAMPLES_PER_DECADE,
    k_min_factor: float = CUTOFF_K_MIN_FACTOR,
) -> List[float]:
    """
    Bound-state momenta k_n of the ordinary equation with a hard cutoff, largest first.

    Level n sits where the (n+1)-th smallest eigenvalue lambda_n(k) of the
    Dirichlet kernel equals 4 kappa.
    """
    if not kappa > CRITICAL_KAPPA:
        raise DomainError(f"the cutoff spectrum needs kappa > 1/16, got {kappa}")
    if not 0.0 < k_min_factor < 1.0:
        raise DomainError(f"k_min_factor must lie in (0, 1), got {k_min_factor}")
    grid = log_grid(cutoff * CUTOFF_DEPTH, cutoff, points_per_decade)
    target = 4.0 * kappa

    def eigenvalues(k: float) -> np.ndarray:
        return 1.0 / _largest_eigenvalues(flat_matrix(k, grid, cutoff), n_levels)

    samples = _log_samples(cutoff * k_min_factor, cutoff * (1.0 - 1e-3), samples_per_decade)
    table = np.array([eigenvalues(float(k)) for k in samples])
    if np.any(table[0] < target):
        raise SolverError(f"a level of kappa={kappa} lies above the top of the k window at the cutoff")

    momenta: List[float] = []
    for n in range(n_levels):
        i = _first_crossing(table[:, n], target)
        if i is None:
            logger.warning("bracket exhaustion: %d of %d cutoff levels found", n, n_levels)
            break
        hi, lo = float(samples[i]), float(samples[i + 1])
        log_root = brentq(
            lambda s, n=n: eigenvalues(math.exp(s))[n] - target,
            math.log(lo),
            math.log(hi),
            xtol=CROSSING_XTOL,
        )
        momenta.append(math.exp(log_root))
    return momenta


__all__ = [
    "RESOLUTION_TOL",
    "default_grid",
    "kernel_matrix",
    "flat_matrix",
    "coupling_eigenvalues",
    "nystrom_flat",
    "CouplingEigencurve",
    "nystrom_eigencurve",
    "oracle_crossings",
    "cutoff_crossings",
]
