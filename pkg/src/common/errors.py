"""
Exception hierarchy shared by every package.

Each class also derives from the builtin that callers would naturally
catch (``ValueError`` for bad input, ``RuntimeError`` for numerical
failures), so ``except ValueError`` keeps working around library calls.
The CLI maps ``ConfigError`` to exit code 2 and any other ``MinlenError``
to exit code 3.
"""

from __future__ import annotations


class MinlenError(Exception):
    """Root of all errors raised by this project."""


class ConfigError(MinlenError, ValueError):
    """Invalid run configuration or invalid physical input."""


class DomainError(MinlenError, ValueError):
    """Input outside the domain where an operation is defined."""


class ParameterPoleError(DomainError):
    """A gamma-function argument or a series denominator hits a pole."""


class SingularityProximityError(DomainError):
    """An ODE continuation path comes too close to a singular point."""


class SolverError(MinlenError, RuntimeError):
    """A numerical procedure failed to produce a trustworthy value."""


class NonConvergenceError(SolverError):
    """A series did not reach its tolerance within the term cap."""


class IntegrationError(SolverError):
    """The adaptive ODE integrator failed (typically step underflow)."""


class FitDegeneracyError(SolverError):
    """The large-momentum tail fit is numerically ill-conditioned."""


__all__ = [
    "MinlenError",
    "ConfigError",
    "DomainError",
    "ParameterPoleError",
    "SingularityProximityError",
    "SolverError",
    "NonConvergenceError",
    "IntegrationError",
    "FitDegeneracyError",
]
