"""
Spectrum containers
-------------------

``SpectrumResult`` is shared by every solver in the project: the ordinary
orthogonality and cutoff spectra, the exact and asymptotic deformed
spectra, the shooting solver and the integral-equation oracle.

Levels are either energies (strictly increasing towards 0-, so |E_n|
decreases with n) or dimensionless omega = -m(beta+beta')E (strictly
decreasing, ground state first).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Tuple

import pandas as pd

from common.errors import DomainError


class SpectrumMethod(str, Enum):
    ORTHOGONALITY = "orthogonality"
    CUTOFF = "cutoff"
    EXACT_DEFORMED = "exact_deformed"
    ASYMPTOTIC_DEFORMED = "asymptotic_deformed"
    SHOOTING_GENERAL = "shooting_general"
    ORACLE = "oracle"


class LevelQuantity(str, Enum):
    ENERGY = "energy"
    OMEGA = "omega"


@dataclass(frozen=True)
class SpectrumResult:
    """
    Ordered bound-state levels with their provenance.

    Parameters
    ----------
    levels:
        Energies or omegas, ordered as described in the module docstring.
    method:
        Which solver produced the levels.
    quantity:
        Whether ``levels`` holds energies or omegas.
    parameters:
        Snapshot of the inputs (kappa, beta, mass, window, ...).
    indices:
        Level labels n; defaults to 0, 1, 2, ...
    residuals:
        Optional per-level residual of the defining condition (|h|, |C1|, ...).
    """

    levels: Tuple[float, ...]
    method: SpectrumMethod
    quantity: LevelQuantity
    parameters: Dict[str, float] = field(default_factory=dict)
    indices: Tuple[int, ...] = ()
    residuals: Tuple[float, ...] = ()

    def __post_init__(self) -> None:
        levels = tuple(float(x) for x in self.levels)
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "method", SpectrumMethod(self.method))
        object.__setattr__(self, "quantity", LevelQuantity(self.quantity))
        indices = tuple(int(n) for n in self.indices) or tuple(range(len(levels)))
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "residuals", tuple(float(r) for r in self.residuals))

        if len(indices) != len(levels):
            raise DomainError(f"{len(indices)} indices for {len(levels)} levels")
        if self.residuals and len(self.residuals) != len(levels):
            raise DomainError(f"{len(self.residuals)} residuals for {len(levels)} levels")

        if self.quantity is LevelQuantity.ENERGY:
            if any(e >= 0.0 for e in levels):
                raise DomainError("bound-state energies must be strictly negative")
            ordered = all(lo < hi for lo, hi in zip(levels, levels[1:]))
        else:
            if any(w <= 0.0 for w in levels):
                raise DomainError("bound-state omegas must be strictly positive")
            ordered = all(hi > lo for hi, lo in zip(levels, levels[1:]))
        if not ordered:
            raise DomainError(f"levels are not strictly monotone: {levels}")

    def __len__(self) -> int:
        return len(self.levels)

    @property
    def is_empty(self) -> bool:
        return not self.levels

    def ratios(self) -> Tuple[float, ...]:
        """Consecutive ratios level[n] / level[n+1]."""
        return tuple(a / b for a, b in zip(self.levels, self.levels[1:]))

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame({"n": list(self.indices), self.quantity.value: list(self.levels)})
        if self.residuals:
            frame["residual"] = list(self.residuals)
        frame["method"] = self.method.value
        return frame


__all__ = ["SpectrumMethod", "LevelQuantity", "SpectrumResult"]
