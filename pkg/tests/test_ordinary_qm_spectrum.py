import math

import pytest

from common.errors import DomainError
from ordinary_qm import (
    Coupling,
    LevelQuantity,
    SpectrumMethod,
    cutoff_spectrum,
    level_factor,
    orthogonality_spectrum,
    phase_angle,
    wavefunction_momentum,
)


def test_orthogonality_spectrum_starts_at_reference():
    result = orthogonality_spectrum(Coupling(0.75), -1.0, 0, 4)
    assert result.levels[0] == -1.0
    assert result.method is SpectrumMethod.ORTHOGONALITY
    assert result.quantity is LevelQuantity.ENERGY
    assert result.indices == (0, 1, 2, 3, 4)


def test_orthogonality_spectrum_ratio():
    result = orthogonality_spectrum(Coupling(0.75), -1.0, 0, 4)
    ratio = math.exp(2.0 * math.pi / math.sqrt(2.75))
    assert result.levels[0] / result.levels[1] == pytest.approx(44.21, rel=1e-3)
    for r in result.ratios():
        assert r == pytest.approx(ratio, rel=1e-12)


def test_orthogonality_spectrum_allows_negative_indices():
    result = orthogonality_spectrum(Coupling(2.0), -1.0, -2, 2)
    assert result.indices == (-2, -1, 0, 1, 2)
    assert result.levels[2] == -1.0
    assert result.levels[0] < result.levels[1] < -1.0


def test_orthogonality_spectrum_scale_covariance():
    c = Coupling(2.0)
    base = orthogonality_spectrum(c, -1.0, 0, 5)
    scaled = orthogonality_spectrum(c, -3.5, 0, 5)
    for a, b in zip(base.levels, scaled.levels):
        assert b == pytest.approx(3.5 * a, rel=1e-14)


def test_orthogonality_spectrum_needs_negative_reference():
    with pytest.raises(DomainError):
        orthogonality_spectrum(Coupling(0.75), 1.0, 0, 3)


def test_cutoff_spectrum_ratio_is_independent_of_phase():
    c = Coupling(0.75)
    result = cutoff_spectrum(c, 1.0, 1.0, 0, 6)
    ratio = math.exp(2.0 * math.pi / c.nu)
    assert len(result) >= 3
    for r in result.ratios():
        assert r == pytest.approx(ratio, rel=1e-12)


def test_cutoff_spectrum_closed_form():
    c = Coupling(0.75)
    result = cutoff_spectrum(c, 1.0, 0.5, 0, 4)
    for n, energy in zip(result.indices, result.levels):
        expected = -math.exp((2.0 / c.nu) * (phase_angle(c) - (n + 0.5) * math.pi))
        assert energy == pytest.approx(expected, rel=1e-13)


def test_cutoff_spectrum_scales_with_lambda_squared():
    c = Coupling(2.0)
    base = cutoff_spectrum(c, 1.0, 1.0, 0, 8)
    doubled = cutoff_spectrum(c, 2.0, 1.0, 0, 8)
    assert base.indices == doubled.indices
    for a, b in zip(base.levels, doubled.levels):
        assert b == pytest.approx(4.0 * a, rel=1e-13)


def test_cutoff_spectrum_filters_levels_near_the_cutoff():
    c = Coupling(0.75)
    result = cutoff_spectrum(c, 1.0, 0.5, 0, 4, f_valid=0.01)
    assert 0 not in result.indices
    for n, energy in zip(result.indices, result.levels):
        assert abs(energy) < 0.01
        assert level_factor(c, n) < 0.01


def test_cutoff_spectrum_may_be_empty():
    result = cutoff_spectrum(Coupling(0.75), 1.0, 1.0, 0, 0, f_valid=1e-6)
    assert result.is_empty


def test_cutoff_levels_put_a_node_at_the_cutoff():
    c = Coupling(0.75)
    lam, mass = 1.0, 1.0
    result = cutoff_spectrum(c, lam, mass, 0, 4)
    assert len(result) >= 2
    for energy in result.levels:
        k = math.sqrt(-2.0 * mass * energy)
        assert abs(wavefunction_momentum(c, k, lam)) < 1e-2


def test_cutoff_spectrum_rejects_subcritical_coupling():
    with pytest.raises(DomainError):
        cutoff_spectrum(Coupling(0.05), 1.0, 1.0, 0, 3)


def test_levels_accumulate_at_zero():
    result = cutoff_spectrum(Coupling(2.0), 1.0, 1.0, 0, 12)
    assert all(e < 0.0 for e in result.levels)
    assert abs(result.levels[-1]) < abs(result.levels[0]) * 1e-6
