import cmath

import mpmath
import numpy as np
import pytest
from scipy import special

from common.errors import DomainError, NonConvergenceError, ParameterPoleError
from special_fn import Hyp2F1Params, hyp2f1, hyp2f1_near_one

ARGUMENTS = [-40.0, -3.0, -1.0, -0.8, -0.3, 0.0, 0.2, 0.5, 0.7, 0.95]


def _mp_hyp2f1(p: Hyp2F1Params, x: float) -> complex:
    return complex(mpmath.hyp2f1(mpmath.mpc(p.a), mpmath.mpc(p.b), mpmath.mpc(p.c), x))


def _rel(value: complex, reference: complex) -> float:
    return abs(value - reference) / max(abs(reference), 1e-300)


@pytest.mark.parametrize("x", ARGUMENTS + [3.0, 25.0])
def test_zero_parameter_gives_one(x):
    assert hyp2f1(Hyp2F1Params(0.7 + 0.4j, 0.0, 1.3), x) == 1.0


@pytest.mark.parametrize("x", ARGUMENTS)
def test_b_equal_c_gives_power_of_one_minus_x(x):
    a = 1.25 + 0.8j
    b = 0.6 - 0.3j
    expected = cmath.exp(-a * cmath.log(1.0 - x))
    assert _rel(hyp2f1(Hyp2F1Params(a, b, b), x), expected) < 1e-12


@pytest.mark.parametrize("x", ARGUMENTS)
def test_complex_parameters_match_mpmath(x):
    p = Hyp2F1Params(1.25 - 0.9j, 1.25 + 0.9j, 1.7)
    assert _rel(hyp2f1(p, x), _mp_hyp2f1(p, x)) < 1e-11


def test_random_parameters_match_mpmath():
    rng = np.random.default_rng(5)
    for _ in range(100):
        p = Hyp2F1Params(
            complex(rng.uniform(-1.5, 2.5), rng.uniform(-2.0, 2.0)),
            complex(rng.uniform(-1.5, 2.5), rng.uniform(-2.0, 2.0)),
            complex(rng.uniform(0.3, 3.0), rng.uniform(-0.5, 0.5)),
        )
        x = float(rng.uniform(-10.0, 0.95))
        reference = _mp_hyp2f1(p, x)
        assert abs(hyp2f1(p, x) - reference) < 1e-9 * max(1.0, abs(reference))


def test_schwarz_symmetry_on_random_draws():
    rng = np.random.default_rng(17)
    for _ in range(100):
        p = Hyp2F1Params(
            complex(rng.uniform(-2.0, 3.0), rng.uniform(-3.0, 3.0)),
            complex(rng.uniform(-2.0, 3.0), rng.uniform(-3.0, 3.0)),
            complex(rng.uniform(0.2, 3.0), rng.uniform(-1.0, 1.0)),
        )
        x = float(rng.uniform(-20.0, 0.98))
        value = hyp2f1(p, x)
        mirrored = hyp2f1(p.conjugate(), x)
        assert abs(mirrored - value.conjugate()) <= 1e-12 * max(1.0, abs(value))


def test_gauss_contiguous_relation_in_a():
    # (c-a) F(a-1) + (2a - c + (b-a) x) F(a) + a (x-1) F(a+1) = 0
    rng = np.random.default_rng(23)
    for _ in range(100):
        a = complex(rng.uniform(-1.0, 2.0), rng.uniform(-2.0, 2.0))
        b = complex(rng.uniform(-1.0, 2.0), rng.uniform(-2.0, 2.0))
        c = complex(rng.uniform(0.5, 3.0), rng.uniform(-0.5, 0.5))
        x = float(rng.uniform(-6.0, 0.9))
        lower = (c - a) * hyp2f1(Hyp2F1Params(a - 1.0, b, c), x)
        middle = (2.0 * a - c + (b - a) * x) * hyp2f1(Hyp2F1Params(a, b, c), x)
        upper = a * (x - 1.0) * hyp2f1(Hyp2F1Params(a + 1.0, b, c), x)
        scale = abs(lower) + abs(middle) + abs(upper)
        assert abs(lower + middle + upper) <= 1e-10 * scale


def test_integer_c_minus_a_minus_b_is_handled():
    p = Hyp2F1Params(0.3 + 0.2j, 0.7 - 0.2j, 2.0)
    assert _rel(hyp2f1(p, 0.9), _mp_hyp2f1(p, 0.9)) < 1e-8


def test_integer_b_minus_a_is_handled():
    p = Hyp2F1Params(0.4 + 0.1j, 1.4 + 0.1j, 2.3)
    assert _rel(hyp2f1(p, -3.0), _mp_hyp2f1(p, -3.0)) < 1e-12


@pytest.mark.parametrize(
    "a, b, c, x",
    [
        (1.0, 2.0, 3.0, -1.5),
        (0.3, 1.3, 2.0, -3.0),
        (0.5, 2.5, 1.7, -10.0),
        (0.3, 1.1, 2.0, -3.0),
        (1.25, 0.4, 1.5, -200.0),
    ],
)
def test_negative_argument_real_parameters_match_scipy(a, b, c, x):
    value = hyp2f1(Hyp2F1Params(a, b, c), x)
    assert value.imag == 0.0
    assert _rel(value, special.hyp2f1(a, b, c, x)) < 1e-12


@pytest.mark.parametrize("x", [-0.8, -3.0, -24.0, -400.0])
def test_degenerate_closed_forms_below_minus_one(x):
    # F(1, 1; 2; x) = -ln(1 - x) / x and F(1/2, 1/2; 3/2; -z^2) = asinh(z) / z
    assert _rel(hyp2f1(Hyp2F1Params(1.0, 1.0, 2.0), x), -np.log1p(-x) / x) < 1e-12
    z = np.sqrt(-x)
    assert _rel(hyp2f1(Hyp2F1Params(0.5, 0.5, 1.5), x), np.arcsinh(z) / z) < 1e-12


def test_terminating_series_is_a_polynomial():
    # F(-2, b; c; x) = 1 - 2 b x / c + b (b+1) x^2 / (c (c+1))
    b, c, x = 0.7, 1.9, -12.0
    expected = 1.0 - 2.0 * b * x / c + b * (b + 1.0) * x * x / (c * (c + 1.0))
    assert _rel(hyp2f1(Hyp2F1Params(-2.0, b, c), x), expected) < 1e-13


def test_gauss_summation_at_one():
    p = Hyp2F1Params(0.2 + 0.1j, 0.3, 1.7)
    assert _rel(hyp2f1(p, 1.0), _mp_hyp2f1(p, 1.0)) < 1e-12


def test_divergent_at_one_raises():
    with pytest.raises(DomainError):
        hyp2f1(Hyp2F1Params(1.0, 1.5, 2.0), 1.0)


def test_near_one_agrees_with_direct_route():
    p = Hyp2F1Params(1.1 + 0.7j, 1.1 - 0.7j, 1.5)
    assert _rel(hyp2f1_near_one(p, 0.1), hyp2f1(p, 0.9)) < 1e-12


def test_near_one_below_machine_epsilon_approaches_gauss_sum():
    p = Hyp2F1Params(0.2, 0.3, 1.7)
    assert _rel(hyp2f1_near_one(p, 1e-30), hyp2f1(p, 1.0)) < 1e-12


def test_near_one_rejects_nonpositive_eps():
    with pytest.raises(DomainError):
        hyp2f1_near_one(Hyp2F1Params(0.2, 0.3, 1.7), 0.0)


def test_pole_in_c_rejected():
    with pytest.raises(ParameterPoleError):
        Hyp2F1Params(0.5, 0.5, -2.0)


def test_series_term_cap_raises():
    with pytest.raises(NonConvergenceError):
        hyp2f1(Hyp2F1Params(0.5, 0.7, 1.3), 0.45, max_terms=3)
