"""
Gauss hypergeometric function 2F1(a, b; c; x)
---------------------------------------------

Complex parameters, real argument anywhere on the real line. The
evaluation is routed by region; outside the degenerate cases below the
power series is only summed for |argument| <= 1/2:

- |x| <= 1/2            direct series
- x < -1/2              Pfaff map x -> x/(x-1) into (1/3, 1), then the
                        series or the near-one evaluation below
- 1/2 < x < 1           1-x connection (``hyp2f1_near_one``)
- x = 1                 Gauss summation, needs Re(c-a-b) > 0
- x > 1                 1/x connection; the value on the lower lip
                        (x - i0) is returned, i.e. arg(-x) = +pi

Both connection formulas have gamma-function poles when b-a (1/x) or
c-a-b (1-x) is an integer. Near such a point the 1-x side sums the series
at 1 - eps directly while eps >= ``DIRECT_SERIES_EPS``; below that, and on
the 1/x side, the function is evaluated at b shifted to
+-``DEGENERACY_OFFSET`` around the exact degeneracy and linearly
interpolated back.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional

from common.errors import DomainError, NonConvergenceError, ParameterPoleError

from .gamma import gamma_ratio, is_nonpositive_integer, nearest_integer

DEFAULT_TOL = 1e-15
MAX_TERMS = 100_000
DEGENERACY_TOL = 1e-5
DEGENERACY_OFFSET = 1e-5
# smallest 1 - x at which a degenerate near-one value is summed term by term
DIRECT_SERIES_EPS = 1e-3


@dataclass(frozen=True)
class Hyp2F1Params:
    """Parameter triple (a, b, c); c may not be zero or a negative integer."""

    a: complex
    b: complex
    c: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        object.__setattr__(self, "c", complex(self.c))
        if is_nonpositive_integer(self.c):
            raise ParameterPoleError(f"2F1 parameter c={self.c} is a nonpositive integer")

    def conjugate(self) -> "Hyp2F1Params":
        return Hyp2F1Params(self.a.conjugate(), self.b.conjugate(), self.c.conjugate())

    def with_b(self, b: complex) -> "Hyp2F1Params":
        return Hyp2F1Params(self.a, b, self.c)

    @property
    def is_real(self) -> bool:
        return self.a.imag == 0.0 and self.b.imag == 0.0 and self.c.imag == 0.0

    @property
    def is_trivial(self) -> bool:
        return self.a == 0 or self.b == 0

    @property
    def is_terminating(self) -> bool:
        """True when the series is a polynomial (a or b a nonpositive integer)."""
        return is_nonpositive_integer(self.a) or is_nonpositive_integer(self.b)


def _series(p: Hyp2F1Params, x: float, tol: float, max_terms: int) -> complex:
    a, b, c = p.a, p.b, p.c
    term = 1.0 + 0j
    total = 1.0 + 0j
    previous_small = False
    for n in range(max_terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * x
        total += term
        small = abs(term) <= tol * abs(total)
        if small and previous_small:
            return total
        previous_small = small
    raise NonConvergenceError(
        f"2F1 series with a={a}, b={b}, c={c} at x={x} did not converge in {max_terms} terms"
    )


def _interpolate_in_b(
    evaluate: Callable[[complex], complex],
    b: complex,
    b_exact: complex,
) -> complex:
    b_lo = b_exact - DEGENERACY_OFFSET
    b_hi = b_exact + DEGENERACY_OFFSET
    f_lo = evaluate(b_lo)
    f_hi = evaluate(b_hi)
    return f_lo + (f_hi - f_lo) * (b - b_lo) / (b_hi - b_lo)


def _near_one_connection(p: Hyp2F1Params, eps: float, tol: float, max_terms: int) -> complex:
    a, b, c = p.a, p.b, p.c
    m = c - a - b
    first = gamma_ratio([c, m], [c - a, c - b])
    second = gamma_ratio([c, -m], [a, b])
    total = 0j
    if first != 0:
        total += first * hyp2f1(Hyp2F1Params(a, b, 1.0 - m), eps, tol=tol, max_terms=max_terms)
    if second != 0:
        total += (
            second
            * cmath.exp(m * math.log(eps))
            * hyp2f1(Hyp2F1Params(c - a, c - b, 1.0 + m), eps, tol=tol, max_terms=max_terms)
        )
    return total


def hyp2f1_near_one(
    p: Hyp2F1Params,
    eps: float,
    *,
    tol: float = DEFAULT_TOL,
    max_terms: int = MAX_TERMS,
) -> complex:
    """
    Value of 2F1(a, b; c; 1 - eps) computed from ``eps`` directly.

    Useful when 1 - eps is not representable (eps below machine epsilon),
    as happens for the quantization function at exponentially small
    binding energies.
    """
    eps = float(eps)
    if not eps > 0.0:
        raise DomainError(f"hyp2f1_near_one needs eps > 0, got {eps}")
    if p.is_trivial:
        return 1.0 + 0j
    if p.is_terminating or eps >= 0.5:
        return hyp2f1(p, 1.0 - eps, tol=tol, max_terms=max_terms)

    m = p.c - p.a - p.b
    n = nearest_integer(m, DEGENERACY_TOL)
    if n is None:
        return _near_one_connection(p, eps, tol, max_terms)
    if eps >= DIRECT_SERIES_EPS:
        # geometric in 1 - eps; the tail is ~ term / eps
        return _series(p, 1.0 - eps, tol * eps, max_terms)
    b_exact = p.b + (m - n)
    return _interpolate_in_b(
        lambda b: _near_one_connection(p.with_b(b), eps, tol, max_terms),
        p.b,
        b_exact,
    )


def _inverse_connection(p: Hyp2F1Params, x: float, tol: float, max_terms: int) -> complex:
    a, b, c = p.a, p.b, p.c
    log_minus_x = complex(math.log(abs(x)), math.pi if x > 0 else 0.0)
    first = gamma_ratio([c, b - a], [b, c - a])
    second = gamma_ratio([c, a - b], [a, c - b])
    total = 0j
    if first != 0:
        total += (
            first
            * cmath.exp(-a * log_minus_x)
            * hyp2f1(Hyp2F1Params(a, a - c + 1.0, a - b + 1.0), 1.0 / x, tol=tol, max_terms=max_terms)
        )
    if second != 0:
        total += (
            second
            * cmath.exp(-b * log_minus_x)
            * hyp2f1(Hyp2F1Params(b, b - c + 1.0, b - a + 1.0), 1.0 / x, tol=tol, max_terms=max_terms)
        )
    return total


def _pfaff(p: Hyp2F1Params, x: float, tol: float, max_terms: int) -> complex:
    """(1 - x)^-a 2F1(a, c - b; c; x / (x - 1)) for x < 0."""
    q = Hyp2F1Params(p.a, p.c - p.b, p.c)
    prefactor = cmath.exp(-p.a * math.log1p(-x))
    y = x / (x - 1.0)
    if q.is_trivial:
        return prefactor
    if q.is_terminating or y <= 0.5:
        return prefactor * _series(q, y, tol, max_terms)
    # 1 - y = 1 / (1 - x) exactly, not by cancellation
    return prefactor * hyp2f1_near_one(q, 1.0 / (1.0 - x), tol=tol, max_terms=max_terms)


def _gauss_sum(p: Hyp2F1Params) -> complex:
    m = p.c - p.a - p.b
    if m.real <= 0:
        raise DomainError(f"2F1 diverges at x=1 for Re(c-a-b)={m.real} <= 0")
    return gamma_ratio([p.c, m], [p.c - p.a, p.c - p.b])


def hyp2f1(
    p: Hyp2F1Params,
    x: float,
    *,
    tol: float = DEFAULT_TOL,
    max_terms: int = MAX_TERMS,
) -> complex:
    """
    Evaluate 2F1(a, b; c; x) for real x.

    Parameters
    ----------
    p:
        Parameter triple.
    x:
        Real argument. x = 1 requires Re(c - a - b) > 0.
    tol:
        Relative stopping tolerance of every series summed on the way.
    max_terms:
        Term cap per series.

    Returns
    -------
    value:
        Complex value; for real parameters and x < 1 the imaginary part is 0.
    """
    x = float(x)
    if p.is_trivial or x == 0.0:
        return 1.0 + 0j
    if p.is_terminating or abs(x) <= 0.5:
        return _series(p, x, tol, max_terms)
    if x < 1.0:
        if x < -0.5:
            value = _pfaff(p, x, tol, max_terms)
        else:
            value = hyp2f1_near_one(p, 1.0 - x, tol=tol, max_terms=max_terms)
        # gamma ratios of real arguments carry round-off phases
        return complex(value.real, 0.0) if p.is_real else value
    if x == 1.0:
        return _gauss_sum(p)

    m = p.b - p.a
    n: Optional[int] = nearest_integer(m, DEGENERACY_TOL)
    if n is None:
        return _inverse_connection(p, x, tol, max_terms)
    b_exact = p.b - (m - n)
    return _interpolate_in_b(
        lambda b: _inverse_connection(p.with_b(b), x, tol, max_terms),
        p.b,
        b_exact,
    )


__all__ = [
    "DEFAULT_TOL",
    "MAX_TERMS",
    "DEGENERACY_TOL",
    "DEGENERACY_OFFSET",
    "DIRECT_SERIES_EPS",
    "Hyp2F1Params",
    "hyp2f1",
    "hyp2f1_near_one",
]
