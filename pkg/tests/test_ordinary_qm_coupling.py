import cmath
import math

import pandas as pd
import pytest

from common.errors import ConfigError, DomainError
from ordinary_qm import (
    CRITICAL_KAPPA,
    Coupling,
    LevelQuantity,
    SpectrumMethod,
    SpectrumResult,
    characteristic_residual,
    characteristic_roots,
    green_kernel_flat,
)

NU_3_4 = math.sqrt(2.75)


def test_nu_for_three_quarters():
    c = Coupling(0.75)
    assert c.is_supercritical
    assert c.nu == pytest.approx(1.6583123951777, rel=1e-13)
    assert c.nu**2 == pytest.approx(4.0 * c.kappa - 0.25, abs=1e-14)


def test_subcritical_coupling_has_no_real_nu():
    c = Coupling(0.05)
    assert not c.is_supercritical
    assert c.nu == pytest.approx(math.sqrt(0.05), rel=1e-14)
    with pytest.raises(DomainError):
        c.require_supercritical()


@pytest.mark.parametrize("kappa", [0.0, -1.0, float("nan"), float("inf")])
def test_invalid_coupling_is_a_config_error(kappa):
    with pytest.raises(ConfigError):
        Coupling(kappa)


def test_level_ratio():
    assert Coupling(0.75).level_ratio == pytest.approx(44.21, rel=1e-3)


def test_characteristic_roots_above_threshold():
    c = Coupling(0.75)
    low, high = characteristic_roots(c)
    assert low == pytest.approx(complex(-2.5, -NU_3_4), abs=1e-13)
    assert high == pytest.approx(complex(-2.5, NU_3_4), abs=1e-13)
    for s in (low, high):
        assert abs(characteristic_residual(c, s)) < 1e-12


def test_characteristic_roots_at_threshold_are_double():
    low, high = characteristic_roots(Coupling(CRITICAL_KAPPA))
    assert low == pytest.approx(-2.5, abs=1e-12)
    assert high == pytest.approx(-2.5, abs=1e-12)


def test_characteristic_roots_below_threshold_are_real():
    c = Coupling(0.05)
    low, high = characteristic_roots(c)
    half_width = 0.5 * math.sqrt(0.2)
    assert low == pytest.approx(-2.5 - half_width, abs=1e-13)
    assert high == pytest.approx(-2.5 + half_width, abs=1e-13)
    assert low.imag == 0.0 and high.imag == 0.0
    for s in (low, high):
        assert abs(characteristic_residual(c, s)) < 1e-12


def test_characteristic_roots_solve_the_quadratic():
    for kappa in (0.1, 0.75, 2.0, 7.3):
        c = Coupling(kappa)
        for s in characteristic_roots(c):
            assert abs(s * s + 5.0 * s + 6.0 + 4.0 * kappa) < 1e-12
            assert cmath.isfinite(s)


@pytest.mark.parametrize(
    "p, pprime, expected",
    [(2.0, 1.0, 0.5), (1.0, 2.0, 0.5), (3.0, 3.0, 1.0 / 3.0)],
)
def test_flat_green_function(p, pprime, expected):
    assert green_kernel_flat(p, pprime) == expected


def test_flat_green_function_rejects_origin():
    with pytest.raises(DomainError):
        green_kernel_flat(0.0, 1.0)


def test_spectrum_result_orders_energies_upwards():
    result = SpectrumResult(
        levels=(-4.0, -1.0, -0.25),
        method=SpectrumMethod.CUTOFF,
        quantity=LevelQuantity.ENERGY,
    )
    assert result.indices == (0, 1, 2)
    assert result.ratios() == (4.0, 4.0)
    frame = result.to_frame()
    assert isinstance(frame, pd.DataFrame)
    assert list(frame.columns) == ["n", "energy", "method"]
    assert frame["method"].unique().tolist() == ["cutoff"]


def test_spectrum_result_orders_omegas_downwards():
    result = SpectrumResult(
        levels=(0.07, 0.0015),
        method="exact_deformed",
        quantity="omega",
        residuals=(1e-15, 2e-17),
    )
    assert result.method is SpectrumMethod.EXACT_DEFORMED
    assert "residual" in result.to_frame().columns


@pytest.mark.parametrize(
    "levels, quantity",
    [
        ((-1.0, -4.0), LevelQuantity.ENERGY),
        ((-1.0, 0.5), LevelQuantity.ENERGY),
        ((0.001, 0.07), LevelQuantity.OMEGA),
        ((0.07, 0.07), LevelQuantity.OMEGA),
    ],
)
def test_spectrum_result_rejects_broken_ordering(levels, quantity):
    with pytest.raises(DomainError):
        SpectrumResult(levels=levels, method=SpectrumMethod.ORACLE, quantity=quantity)


def test_empty_spectrum_is_allowed():
    result = SpectrumResult(levels=(), method=SpectrumMethod.CUTOFF, quantity=LevelQuantity.ENERGY)
    assert result.is_empty
    assert len(result) == 0
