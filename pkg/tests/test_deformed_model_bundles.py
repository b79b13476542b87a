import math
import random

import pytest

from common.errors import DomainError
from deformed_model import (
    dimensionless_params,
    heun_bundle,
    heun_coefficients_in_x,
    hyp_bundle_special,
    hypergeometric_coefficients,
    nu_tilde,
    quantization_argument,
    zero_energy_bundle,
)


def test_equal_betas_reduce_heun_to_gauss():
    bundle = heun_bundle(dimensionless_params(0.75, 0.5, 0.07))
    assert bundle.heun.e == 0.0
    assert (bundle.heun.a * bundle.heun.b).real == pytest.approx(-bundle.q, rel=1e-14)
    assert bundle.q == pytest.approx(-(1.5 + 0.75 / 0.86), rel=1e-14)


def test_heun_bundle_structure():
    bundle = heun_bundle(dimensionless_params(2.0, 1.0 / 3.0, 0.2))
    h = bundle.heun
    assert (h.c, h.d) == (1.5, 2.0)
    assert h.e == pytest.approx(0.5 - 1.0 / 3.0, abs=1e-15)
    assert bundle.xi0 == pytest.approx(0.4 / (0.4 - 1.0), rel=1e-14)
    assert h.a.conjugate() == pytest.approx(h.b, abs=1e-14)
    assert h.is_real


def test_fuchsian_identity_for_random_inputs():
    rng = random.Random(3)
    for _ in range(200):
        op = dimensionless_params(rng.uniform(0.01, 5.0), rng.uniform(0.0, 1.0), rng.uniform(1e-6, 0.499))
        assert abs(heun_bundle(op).heun.fuchsian_residual) < 1e-12


def test_nu_tilde_at_small_omega():
    op = dimensionless_params(0.75, 0.5, 1e-12)
    assert nu_tilde(op) == pytest.approx(complex(0.0, math.sqrt(3.0 - 0.25)), rel=1e-10)


def test_nu_tilde_real_below_threshold():
    op = dimensionless_params(0.01, 0.5, 0.1)
    value = nu_tilde(op)
    assert value.imag == 0.0
    assert value.real == pytest.approx(math.sqrt(0.25 - 0.04 / 0.8), rel=1e-14)


def test_special_bundle_at_three_quarters():
    op = dimensionless_params(0.75, 0.5, 0.07)
    p = hyp_bundle_special(op)
    nt = complex(0.0, math.sqrt(3.0 / 0.86 - 0.25))
    assert p.a == pytest.approx(1.25 - nt / 2.0, abs=1e-14)
    assert p.b == pytest.approx(1.25 + nt / 2.0, abs=1e-14)
    assert p.c == 1.5
    assert p.a == pytest.approx(p.b.conjugate(), abs=1e-15)


@pytest.mark.parametrize("kappa, omega", [(0.75, 0.07), (2.0, 0.37), (0.05, 0.2), (2.0, 1e-9)])
def test_special_bundle_sum(kappa, omega):
    p = hyp_bundle_special(dimensionless_params(kappa, 0.5, omega))
    assert p.a + p.b == pytest.approx(2.5, abs=1e-14)


def test_special_bundle_at_large_omega():
    p = hyp_bundle_special(dimensionless_params(0.75, 0.5, 1e12))
    assert p.a == pytest.approx(1.0, abs=1e-10)
    assert p.b == pytest.approx(1.5, abs=1e-10)


def test_special_bundle_needs_equal_betas():
    with pytest.raises(DomainError):
        hyp_bundle_special(dimensionless_params(0.75, 1.0 / 3.0, 0.1))


def test_heun_bundle_pole_and_range():
    with pytest.raises(DomainError):
        heun_bundle(dimensionless_params(0.75, 0.5, 0.5))
    with pytest.raises(DomainError):
        heun_bundle(dimensionless_params(0.75, 0.5, 0.7))
    with pytest.raises(DomainError):
        heun_bundle(dimensionless_params(0.75, 0.5, 0.0))


def test_zero_energy_bundle_equal_betas_has_b_zero():
    p = zero_energy_bundle(dimensionless_params(0.75, 0.5, 0.0))
    assert p.b == 0
    assert p.is_trivial


@pytest.mark.parametrize("omega4", [0.0, 1.0 / 3.0, 0.5, 1.0])
def test_zero_energy_bundle_structure(omega4):
    kappa = 0.75
    nu = math.sqrt(4.0 * kappa - 0.25)
    p = zero_energy_bundle(dimensionless_params(kappa, omega4, 0.0))
    assert p.a + p.b == pytest.approx(complex(0.5 - omega4, -nu), abs=1e-14)
    assert p.c == complex(1.0, -nu)
    mu_sq = (omega4 - 1.0) ** 2 - 4.0 * kappa
    base = complex(0.25 - omega4 / 2.0, -nu / 2.0)
    assert p.a * p.b == pytest.approx(base * base - mu_sq / 4.0, abs=1e-13)


def test_zero_energy_bundle_needs_supercritical_coupling():
    with pytest.raises(DomainError):
        zero_energy_bundle(dimensionless_params(0.05, 0.5, 0.0))


def test_quantization_argument_is_inverse_xi0():
    for omega in (1e-8, 0.07, 0.25, 0.49):
        op = dimensionless_params(0.75, 0.5, omega)
        x = quantization_argument(op)
        xi0 = heun_bundle(op).xi0
        assert xi0 < 0.0
        assert x * xi0 == pytest.approx(1.0, rel=1e-14)
        assert 1.0 - x == pytest.approx(1.0 / (2.0 * omega), rel=1e-12)


def test_heun_and_gauss_equations_coincide_for_equal_betas():
    op = dimensionless_params(2.0, 0.5, 0.3)
    bundle = heun_bundle(op)
    for x in (-0.9, -0.3, 0.2, 0.45, 0.8):
        p_heun, q_heun = heun_coefficients_in_x(bundle, x)
        p_gauss, q_gauss = hypergeometric_coefficients(op, x)
        assert p_heun == pytest.approx(p_gauss, rel=1e-12)
        assert q_heun == pytest.approx(q_gauss, rel=1e-12)
