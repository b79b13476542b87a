import math

import numpy as np
import pytest

from common.errors import DomainError
from deformed_model import Deformation
from integral_oracle import green_constant, green_kernel_deformed, green_profile
from ordinary_qm import green_kernel_flat


def test_constant_for_equal_betas_is_sqrt_omega1():
    assert green_constant(0.5) == pytest.approx(1.0, rel=1e-14)
    d = Deformation.equal(2e-4)
    p = 3.0
    expected = math.sqrt(1.0 + d.omega1 * p * p) / p - math.sqrt(d.omega1)
    assert green_kernel_deformed(d, p, 0.5) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("p", [0.3, 1.0, 3.0, 20.0])
def test_equal_betas_profile_in_closed_form(p):
    assert green_profile(0.5, p)[0] == pytest.approx(math.sqrt(1.0 + p * p) / p - 1.0, rel=1e-12)


def test_vanishing_beta_has_no_constant():
    assert green_constant(0.0) == 0.0
    p = np.array([0.01, 0.5, 2.0, 40.0])
    np.testing.assert_allclose(green_profile(0.0, p), 1.0 / p, rtol=1e-14)


@pytest.mark.parametrize("omega4", [1.0 / 3.0, 0.5, 0.8, 1.0])
def test_profile_is_continuous_across_the_branch_switch(omega4):
    inner, outer = green_profile(omega4, [1.0 - 1e-9, 1.0])
    assert inner == pytest.approx(outer, rel=1e-7)


@pytest.mark.parametrize("omega4", [0.0, 1.0 / 3.0, 1.0])
def test_profile_decays_with_the_fast_power(omega4):
    s = 1.0 + 2.0 * omega4
    p = 1e4
    assert green_profile(omega4, p)[0] * p**s * s == pytest.approx(1.0, rel=1e-6)


def test_profile_is_positive_and_decreasing():
    p = np.geomspace(1e-4, 1e4, 200)
    g = green_profile(1.0 / 3.0, p)
    assert np.all(g > 0.0)
    assert np.all(np.diff(g) < 0.0)


def test_reduces_to_flat_kernel_without_deformation():
    d = Deformation.equal(1e-16)
    momenta = np.geomspace(0.1, 10.0, 7)
    for p in momenta:
        for q in momenta:
            flat = green_kernel_flat(p, q)
            assert abs(green_kernel_deformed(d, p, q) - flat) <= 1e-6 * flat


def test_symmetry():
    d = Deformation(3e-4, 1e-4)
    assert green_kernel_deformed(d, 2.0, 7.0) == green_kernel_deformed(d, 7.0, 2.0)


def test_domain():
    with pytest.raises(DomainError):
        green_kernel_deformed(Deformation.equal(1e-4), 0.0, 1.0)
    with pytest.raises(DomainError):
        green_kernel_deformed(Deformation(0.0, 0.0), 1.0, 1.0)
    with pytest.raises(DomainError):
        green_profile(0.5, [-1.0])
    with pytest.raises(DomainError):
        green_constant(1.5)
