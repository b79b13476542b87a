from __future__ import annotations

from .errors import (  # noqa: F401
    ConfigError,
    DomainError,
    FitDegeneracyError,
    IntegrationError,
    MinlenError,
    NonConvergenceError,
    ParameterPoleError,
    SingularityProximityError,
    SolverError,
)
from .parallel import THREADS_ENV, ordered_map, resolve_workers  # noqa: F401

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
    "THREADS_ENV",
    "ordered_map",
    "resolve_workers",
]
