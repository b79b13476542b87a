"""
Quadrature grids for the Nyström discretization.

Three maps are available:

- ``log``: trapezoid rule in ln p, the default; the bound states live on
  geometrically separated momentum scales.
- ``linear``: trapezoid rule in p on a finite interval.
- ``rational``: Gauss-Legendre nodes t in (0, 1) mapped by p = s t / (1 - t),
  which covers the half line without truncation.

Every grid remembers how it was built so ``refined()`` can double its
resolution for the convergence check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict

import numpy as np
from scipy.special import roots_legendre

from common.errors import DomainError

MIN_POINTS_PER_DECADE = 12


class GridMap(str, Enum):
    LINEAR = "linear"
    LOG = "log"
    RATIONAL = "rational"


@dataclass(frozen=True, eq=False)
class KernelGrid:
    nodes: np.ndarray
    weights: np.ndarray
    map: GridMap
    params: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if nodes.ndim != 1 or nodes.shape != weights.shape or nodes.size < 2:
            raise DomainError("a kernel grid needs matching one-dimensional nodes and weights")
        if not (np.all(np.isfinite(nodes)) and np.all(np.isfinite(weights))):
            raise DomainError("kernel grid nodes and weights must be finite")
        if nodes[0] <= 0.0 or np.any(np.diff(nodes) <= 0.0):
            raise DomainError("kernel grid nodes must be positive and strictly increasing")
        if np.any(weights <= 0.0):
            raise DomainError("kernel grid weights must be positive")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "map", GridMap(self.map))
        object.__setattr__(self, "params", dict(self.params))

    def __len__(self) -> int:
        return int(self.nodes.size)

    @property
    def p_min(self) -> float:
        return float(self.nodes[0])

    @property
    def p_max(self) -> float:
        return float(self.nodes[-1])

    def refined(self) -> "KernelGrid":
        """The same map with twice the resolution."""
        p = self.params
        if self.map is GridMap.LOG:
            return log_grid(p["p_min"], p["p_max"], 2 * int(p["points_per_decade"]))
        if self.map is GridMap.LINEAR:
            return linear_grid(p["p_min"], p["p_max"], 2 * int(p["n"]) - 1)
        return rational_grid(p["scale"], 2 * int(p["n"]))

    def scaled(self, factor: float) -> "KernelGrid":
        """Grid for the momenta p -> factor p."""
        if not factor > 0.0:
            raise DomainError(f"scale factor must be positive, got {factor}")
        params = dict(self.params)
        for key in ("p_min", "p_max", "scale"):
            if key in params:
                params[key] *= factor
        return KernelGrid(self.nodes * factor, self.weights * factor, self.map, params)


def _trapezoid_weights(n: int, step: float) -> np.ndarray:
    weights = np.full(n, step)
    weights[0] *= 0.5
    weights[-1] *= 0.5
    return weights


def log_grid(p_min: float, p_max: float, points_per_decade: int = 32) -> KernelGrid:
    if not 0.0 < p_min < p_max:
        raise DomainError(f"log grid needs 0 < p_min < p_max, got ({p_min}, {p_max})")
    if points_per_decade < MIN_POINTS_PER_DECADE:
        raise DomainError(
            f"log grid needs at least {MIN_POINTS_PER_DECADE} points per decade, got {points_per_decade}"
        )
    n = int(math.ceil(math.log10(p_max / p_min) * points_per_decade)) + 1
    t, step = np.linspace(math.log(p_min), math.log(p_max), n, retstep=True)
    nodes = np.exp(t)
    # dp = p dt
    weights = _trapezoid_weights(n, step) * nodes
    params = {"p_min": p_min, "p_max": p_max, "points_per_decade": points_per_decade}
    return KernelGrid(nodes, weights, GridMap.LOG, params)


def linear_grid(p_min: float, p_max: float, n: int) -> KernelGrid:
    if not 0.0 < p_min < p_max:
        raise DomainError(f"linear grid needs 0 < p_min < p_max, got ({p_min}, {p_max})")
    if n < 2:
        raise DomainError(f"linear grid needs at least 2 nodes, got {n}")
    nodes, step = np.linspace(p_min, p_max, n, retstep=True)
    return KernelGrid(nodes, _trapezoid_weights(n, step), GridMap.LINEAR, {"p_min": p_min, "p_max": p_max, "n": n})


def rational_grid(scale: float, n: int) -> KernelGrid:
    """Gauss-Legendre in t on (0, 1), p = scale t / (1 - t)."""
    if not scale > 0.0:
        raise DomainError(f"rational grid needs a positive scale, got {scale}")
    if n < 2:
        raise DomainError(f"rational grid needs at least 2 nodes, got {n}")
    x, w = roots_legendre(n)
    t = 0.5 * (x + 1.0)
    nodes = scale * t / (1.0 - t)
    weights = 0.5 * w * scale / (1.0 - t) ** 2
    return KernelGrid(nodes, weights, GridMap.RATIONAL, {"scale": scale, "n": n})


__all__ = ["MIN_POINTS_PER_DECADE", "GridMap", "KernelGrid", "log_grid", "linear_grid", "rational_grid"]
