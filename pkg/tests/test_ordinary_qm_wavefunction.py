import math

import mpmath
import numpy as np
import pytest
from scipy.integrate import solve_ivp

from common.errors import DomainError
from ordinary_qm import (
    Coupling,
    momentum_params,
    phase_angle,
    tail_coefficient,
    wavefunction_momentum,
    wavefunction_tail,
)
from special_fn import Hyp2F1Params, hyp2f1


def test_wavefunction_is_one_at_origin():
    assert wavefunction_momentum(Coupling(0.75), 1.0, 0.0) == pytest.approx(1.0, abs=1e-15)


def test_wavefunction_depends_only_on_p_over_k():
    c = Coupling(2.0)
    assert wavefunction_momentum(c, 2.0, 3.0) == pytest.approx(wavefunction_momentum(c, 1.0, 1.5), rel=1e-13)


def test_wavefunction_matches_direct_ode_integration():
    c = Coupling(0.75)
    p = momentum_params(c)
    a_plus_b = (p.a + p.b).real
    ab = (p.a * p.b).real
    x0, x1 = -0.25, -4.0
    f0 = hyp2f1(p, x0).real
    fp0 = (p.a * p.b / p.c * hyp2f1(Hyp2F1Params(p.a + 1, p.b + 1, p.c + 1), x0)).real

    def rhs(x, y):
        f, fp = y
        return [fp, ((a_plus_b + 1.0) * x - 1.5) * fp / (x * (1.0 - x)) + ab * f / (x * (1.0 - x))]

    sol = solve_ivp(rhs, (x0, x1), [f0, fp0], method="DOP853", rtol=1e-12, atol=1e-14)
    assert sol.success
    assert wavefunction_momentum(c, 1.0, 2.0) == pytest.approx(sol.y[0, -1], rel=1e-8)


def test_phase_angle_matches_mpmath():
    for kappa in (0.75, 2.0):
        nu = Coupling(kappa).nu
        i_nu = mpmath.mpc(0, nu)
        a = mpmath.gamma(i_nu) / (mpmath.gamma(1.25 + i_nu / 2) * mpmath.gamma(0.25 + i_nu / 2))
        assert phase_angle(Coupling(kappa)) == pytest.approx(float(mpmath.arg(a)), abs=1e-12)


def test_tail_approximates_wavefunction_at_large_momentum():
    c = Coupling(0.75)
    envelope = 2.0 * abs(tail_coefficient(c))
    for p in (1e3, 3e3, 1e4):
        exact = wavefunction_momentum(c, 1.0, p)
        assert abs(exact - wavefunction_tail(c, 1.0, p)) < 1e-5 * envelope * p**-2.5


def test_tail_envelope_is_bounded_and_does_not_decay():
    c = Coupling(0.75)
    envelope = 2.0 * abs(tail_coefficient(c))
    momenta = np.logspace(2.0, 4.0, 400)
    scaled = np.array([abs(wavefunction_momentum(c, 1.0, p)) * p**2.5 for p in momenta])
    assert scaled.max() == pytest.approx(envelope, rel=1e-3)
    # the log-periodic oscillation keeps hitting the envelope in every half of the range
    half = len(momenta) // 2
    assert scaled[:half].max() > 0.99 * envelope
    assert scaled[half:].max() > 0.99 * envelope


def test_tail_coefficient_is_gamma_three_halves_times_phase_constant():
    c = Coupling(2.0)
    assert abs(tail_coefficient(c)) > 0.0
    assert math.atan2(tail_coefficient(c).imag, tail_coefficient(c).real) == pytest.approx(phase_angle(c), abs=1e-14)


def test_wavefunction_rejects_bad_scales():
    c = Coupling(0.75)
    with pytest.raises(DomainError):
        wavefunction_momentum(c, 0.0, 1.0)
    with pytest.raises(DomainError):
        wavefunction_momentum(c, 1.0, -1.0)
    with pytest.raises(DomainError):
        wavefunction_tail(c, 1.0, 0.0)


def test_wavefunction_needs_supercritical_coupling():
    with pytest.raises(DomainError):
        wavefunction_momentum(Coupling(0.05), 1.0, 1.0)
