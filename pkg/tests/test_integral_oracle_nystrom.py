import math

import numpy as np
import pytest

from common.errors import DomainError
from deformed_model import Deformation
from deformed_solver import find_spectrum_exact
from integral_oracle import (
    RESOLUTION_TOL,
    CouplingEigencurve,
    coupling_eigenvalues,
    cutoff_crossings,
    default_grid,
    kernel_matrix,
    linear_grid,
    log_grid,
    nystrom_eigencurve,
    nystrom_flat,
    oracle_crossings,
)
from ordinary_qm import Coupling, SpectrumMethod, phase_angle

SMALL_GRID = log_grid(1e-4, 1e2, 12)


def test_symmetrized_operator_is_symmetric_and_positive():
    k = kernel_matrix(SMALL_GRID, 1.0 / 3.0, 0.05)
    assert np.max(np.abs(k - k.T)) < 1e-12
    eigenvalues = np.linalg.eigvalsh(k)
    assert eigenvalues.min() > -1e-12 * eigenvalues.max()


def test_coupling_eigenvalues_are_ascending_and_supercritical():
    kappas = coupling_eigenvalues(SMALL_GRID, 0.5, 0.05, 3)
    assert np.all(np.diff(kappas) > 0.0)
    assert kappas[0] > 1.0 / 16.0


def test_flat_eigenvalues_are_scale_invariant():
    grid = log_grid(1e-6, 1e6, 16)
    a = nystrom_flat(0.75, 1.0, grid)
    b = nystrom_flat(0.75, 2.0, grid.scaled(2.0))
    np.testing.assert_allclose(a, b, rtol=1e-10)


def test_flat_lowest_eigenvalue_does_not_select_k():
    grid = log_grid(1e-6, 1e12, 32)
    at_one = nystrom_flat(0.75, 1.0, grid, n_eigs=1)[0]
    at_two = nystrom_flat(0.75, 2.0, grid, n_eigs=1)[0]
    assert at_one > 0.25
    assert abs(at_two / at_one - 1.0) < 5e-3


def test_cutoff_restores_the_geometric_levels():
    momenta = cutoff_crossings(0.75, 1.0, 2)
    assert len(momenta) == 2
    assert momenta[0] > momenta[1]
    c = Coupling(0.75)
    expected = math.exp((phase_angle(c) - 1.5 * math.pi) / c.nu)
    assert momenta[1] == pytest.approx(expected, rel=0.05)


def test_flat_eigenvalues_count_levels_above_k():
    momenta = cutoff_crossings(0.75, 1.0, 2)
    grid = log_grid(1e-8, 1.0, 32)
    between = math.sqrt(momenta[0] * momenta[1])
    above_all = math.sqrt(momenta[0])
    assert len(nystrom_flat(0.75, between, grid, n_eigs=None, cutoff=1.0)) == 1
    assert nystrom_flat(0.75, above_all, grid, n_eigs=None, cutoff=1.0) == []


def test_flat_eigenvalues_stay_at_or_below_four_kappa():
    grid = log_grid(1e-6, 1e6, 16)
    supercritical = nystrom_flat(0.75, 1.0, grid, n_eigs=None)
    assert len(supercritical) >= 2
    assert max(supercritical) <= 3.0
    assert np.all(np.diff(supercritical) >= 0.0)
    assert nystrom_flat(0.05, 1.0, grid, n_eigs=None) == []
    with pytest.raises(DomainError):
        nystrom_flat(0.0, 1.0, grid)


def test_cutoff_must_bound_the_grid():
    with pytest.raises(DomainError):
        nystrom_flat(0.75, 0.1, log_grid(1e-4, 10.0, 12), cutoff=1.0)
    with pytest.raises(DomainError):
        cutoff_crossings(0.05, 1.0)


def test_eigencurve_is_nearly_flat_without_deformation():
    grid = log_grid(1e-10, 1e3, 16)
    curve = nystrom_eigencurve(
        Deformation.equal(5e-11), [1e-14, 1e-12, 1e-10], grid, n_eigs=1, check_resolution=False
    )
    lowest = curve.curve(0)
    assert np.all(np.diff(lowest) > 0.0)
    assert np.all(lowest > 1.0 / 16.0)
    assert np.all(lowest < 0.15)
    assert lowest[-1] / lowest[0] < 1.5


def test_eigencurve_does_not_depend_on_workers():
    omegas = [0.3, 0.01, 0.1]
    serial = nystrom_eigencurve(Deformation.equal(1e-4), omegas, SMALL_GRID, workers=1, check_resolution=False)
    pooled = nystrom_eigencurve(Deformation.equal(1e-4), omegas, SMALL_GRID, workers=3, check_resolution=False)
    assert serial == pooled
    assert serial.omega_samples == (0.01, 0.1, 0.3)
    frame = serial.to_frame()
    assert list(frame.columns) == ["omega", "kappa_0", "kappa_1"]


def test_eigencurve_warns_on_a_coarse_grid(caplog):
    with caplog.at_level("WARNING"):
        nystrom_eigencurve(Deformation.equal(1e-4), [0.05], linear_grid(0.01, 10.0, 6), n_eigs=1)
    assert "resolution" in caplog.text


def test_eigencurve_validation():
    with pytest.raises(DomainError):
        CouplingEigencurve((0.1,), ((2.0, 1.0),))
    with pytest.raises(DomainError):
        CouplingEigencurve((0.1, 0.2), ((1.0,),))
    with pytest.raises(DomainError):
        nystrom_eigencurve(Deformation.equal(1e-4), [0.0], SMALL_GRID)
    with pytest.raises(DomainError):
        nystrom_eigencurve(Deformation(0.0, 0.0), [0.1], SMALL_GRID)


def test_subcritical_oracle_is_empty():
    result = oracle_crossings(0.05, 0.5)
    assert result.is_empty
    assert result.method is SpectrumMethod.ORACLE


@pytest.mark.slow
def test_default_grid_is_converged_near_the_ground_state():
    omega = find_spectrum_exact(0.75, max_levels=1).levels[0]
    grid = default_grid()
    coarse = coupling_eigenvalues(grid, 0.5, omega, 2)
    fine = coupling_eigenvalues(grid.refined(), 0.5, omega, 2)
    np.testing.assert_allclose(coarse, fine, rtol=RESOLUTION_TOL)


@pytest.mark.slow
@pytest.mark.parametrize("kappa", [0.75, 2.0])
def test_oracle_matches_exact_levels(kappa):
    oracle = oracle_crossings(kappa, 0.5, n_levels=2)
    exact = find_spectrum_exact(kappa, max_levels=2)
    assert len(oracle) == 2
    np.testing.assert_allclose(oracle.levels, exact.levels, rtol=1e-3)
    assert max(oracle.residuals) < RESOLUTION_TOL
