import cmath
import math

import pytest

from common.errors import DomainError
from deformed_solver import physical_branch_coefficients, zero_energy_wavefunction

NU = math.sqrt(4.0 * 0.75 - 0.25)


@pytest.mark.parametrize("xi", [0.01, 0.2, 0.6, 0.95])
def test_equal_betas_collapse_to_powers(xi):
    a, b = complex(0.3, -1.2), complex(-0.7, 0.4)
    phase = cmath.exp(0.5j * NU * math.log(xi))
    expected = (1.0 - xi) * xi**-1.25 * (a / phase + b * phase)
    assert zero_energy_wavefunction(0.75, 0.5, xi, a, b) == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize("omega4", [0.0, 1.0 / 3.0, 1.0])
def test_small_xi_envelope_is_p_to_minus_five_halves(omega4):
    for xi in (1e-6, 1e-8):
        value = zero_energy_wavefunction(0.75, omega4, xi, 1.0, 0.0)
        assert abs(value) * xi**1.25 == pytest.approx(1.0, abs=1e-4)


@pytest.mark.parametrize("omega4", [1.0 / 3.0, 0.5, 1.0])
def test_physical_branch_decays_like_the_fast_tail(omega4):
    a, b = physical_branch_coefficients(0.75, omega4)
    assert b == pytest.approx(a.conjugate(), abs=1e-15)
    assert abs(a) == pytest.approx(1.0, rel=1e-14)

    def weighted(xi):
        psi = zero_energy_wavefunction(0.75, omega4, xi, a, b)
        assert abs(psi.imag) <= 1e-6 * abs(psi.real)
        p = math.sqrt(xi / (1.0 - xi))
        return p, p * p * psi.real

    p1, w1 = weighted(1.0 - 1e-3)
    p2, w2 = weighted(1.0 - 1e-5)
    assert abs(w2 / w1) == pytest.approx((p2 / p1) ** (-1.0 - 2.0 * omega4), rel=0.01)


def test_generic_branch_keeps_the_slow_tail():
    p1 = math.sqrt((1.0 - 1e-3) / 1e-3)
    p2 = math.sqrt((1.0 - 1e-5) / 1e-5)
    w1 = p1 * p1 * zero_energy_wavefunction(0.75, 1.0 / 3.0, 1.0 - 1e-3, 1.0, 1.0)
    w2 = p2 * p2 * zero_energy_wavefunction(0.75, 1.0 / 3.0, 1.0 - 1e-5, 1.0, 1.0)
    assert abs(w2) == pytest.approx(abs(w1), rel=0.05)


@pytest.mark.parametrize("xi", [0.0, 1.0, -0.1])
def test_domain(xi):
    with pytest.raises(DomainError):
        zero_energy_wavefunction(0.75, 0.5, xi, 1.0, 1.0)


def test_subcritical_coupling_is_rejected():
    with pytest.raises(DomainError):
        zero_energy_wavefunction(0.05, 0.5, 0.3, 1.0, 1.0)
