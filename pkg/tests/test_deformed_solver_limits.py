import math

import pytest

from common.errors import DomainError
from deformed_model import Deformation
from deformed_solver import (
    LimitCheck,
    LimitReport,
    find_spectrum_exact,
    find_spectrum_general,
    tail_exponents,
    tail_omega,
    validate_limits,
)


@pytest.mark.parametrize("omega4", [1.0 / 3.0, 0.5, 1.0])
def test_all_limit_checks_pass(omega4):
    report = validate_limits(0.75, Deformation.from_omega4(1e-4, omega4))
    assert report.passed, report.to_dict()
    assert [c.name for c in report.checks] == ["ordinary_limit", "tail_exponents", "zero_energy"]
    assert report.omega4 == pytest.approx(omega4, rel=1e-14)


def test_tail_exponents_for_equal_betas():
    s1, s2 = tail_exponents(0.75, 0.5)
    assert s1 == pytest.approx(-2.0, abs=1e-3)
    assert s2 == pytest.approx(-4.0, abs=1e-3)


def test_tail_exponents_for_vanishing_beta():
    s1, s2 = tail_exponents(2.0, 0.0)
    assert s1 == pytest.approx(-2.0, abs=1e-3)
    assert s2 == pytest.approx(-3.0, abs=1e-3)


def test_ordinary_check_at_small_deformation():
    report = validate_limits(0.75, Deformation.equal(1e-7))
    check = report.check("ordinary_limit")
    assert check.passed
    assert check.value < 1e-4
    assert "omega1" in check.detail


def test_report_serialization_and_failure():
    report = LimitReport(
        kappa=0.75,
        omega4=0.5,
        checks=(
            LimitCheck("a", True, 1e-6, 1e-4),
            LimitCheck("b", False, math.nan, 1e-4, "series did not converge"),
        ),
    )
    assert not report.passed
    payload = report.to_dict()
    assert payload["passed"] is False
    assert payload["checks"][1]["detail"] == "series did not converge"
    with pytest.raises(KeyError):
        report.check("missing")


def test_limits_need_supercritical_coupling_and_a_deformation():
    with pytest.raises(DomainError):
        validate_limits(0.05, Deformation.equal(1e-4))
    with pytest.raises(DomainError):
        validate_limits(0.75, Deformation(0.0, 0.0))


@pytest.mark.parametrize("kappa", [0.75, 2.0])
def test_tail_omega_sits_between_adjacent_levels(kappa):
    levels = find_spectrum_exact(kappa, max_levels=2).levels
    omega = tail_omega(kappa, 0.5)
    assert levels[1] < omega < levels[0]
    assert omega == pytest.approx(math.sqrt(levels[0] * levels[1]), rel=1e-6)


@pytest.mark.slow
def test_tail_omega_avoids_general_levels():
    d = Deformation.from_omega4(1e-4, 1.0 / 3.0)
    levels = find_spectrum_general(2.0, d, 1e-4, 0.499, 2).levels
    omega = tail_omega(2.0, 1.0 / 3.0)
    assert len(levels) == 2
    assert levels[1] < omega < levels[0]


@pytest.mark.parametrize("kappa", [0.75, 2.0, 5.0])
def test_tail_exponents_hold_across_couplings(kappa):
    s1, s2 = tail_exponents(kappa, 0.5)
    assert s1 == pytest.approx(-2.0, abs=1e-3)
    assert s2 == pytest.approx(-4.0, abs=1e-3)
