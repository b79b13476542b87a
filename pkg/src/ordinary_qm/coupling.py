from __future__ import annotations

import math
from dataclasses import dataclass

from common.errors import ConfigError, DomainError
from special_fn import Hyp2F1Params

CRITICAL_KAPPA = 1.0 / 16.0


@dataclass(frozen=True)
class Coupling:
    """
    Dimensionless coupling kappa = m*alpha/(2 hbar^2) of the -alpha/R^2 potential.

    The derived exponent nu = sqrt(4*kappa - 1/4) is real above the critical
    coupling 1/16 and imaginary below it; ``nu`` always returns the
    magnitude and ``is_supercritical`` says which regime applies.
    """

    kappa: float

    def __post_init__(self) -> None:
        kappa = float(self.kappa)
        if not math.isfinite(kappa) or kappa <= 0.0:
            raise ConfigError(f"coupling kappa must be a positive finite number, got {self.kappa}")
        object.__setattr__(self, "kappa", kappa)

    @property
    def nu_squared(self) -> float:
        return 4.0 * self.kappa - 0.25

    @property
    def is_supercritical(self) -> bool:
        return self.nu_squared > 0.0

    @property
    def nu(self) -> float:
        return math.sqrt(abs(self.nu_squared))

    def require_supercritical(self) -> float:
        """Return the real nu, or raise if kappa <= 1/16."""
        if not self.is_supercritical:
            raise DomainError(
                f"kappa={self.kappa} <= 1/16: nu is not real and the potential has no bound states"
            )
        return self.nu

    @property
    def level_ratio(self) -> float:
        """Ratio of consecutive bound-state energies, exp(2 pi / nu)."""
        return math.exp(2.0 * math.pi / self.require_supercritical())


def momentum_params(c: Coupling) -> Hyp2F1Params:
    """(a, b, c) = (5/4 + i nu/2, 5/4 - i nu/2, 3/2) of the regular momentum-space solution."""
    nu = c.require_supercritical()
    return Hyp2F1Params(1.25 + 0.5j * nu, 1.25 - 0.5j * nu, 1.5)


__all__ = ["CRITICAL_KAPPA", "Coupling", "momentum_params"]
