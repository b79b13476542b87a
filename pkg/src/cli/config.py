"""
Run configuration
-----------------

``RunConfig`` is built once from the parsed arguments and the process
environment by ``build_config``; every command reads its parameters from
it and nothing else. Validation happens in ``RunConfig.__post_init__`` and
raises ``ConfigError`` (exit code 2).
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Any, Dict, Mapping, Optional, Tuple

from common.errors import ConfigError
from common.parallel import THREADS_ENV
from deformed_model import Deformation
from env_loader import LOG_LEVEL_ENV, RUN_LOG_ENV

# beta or beta' when only the other one (or neither) is given
DEFAULT_BETA = 5e-5
DEFAULT_OMEGA_MAX = 0.499
DEFAULT_OMEGA_MIN = 1e-8
SCAN_OMEGA_MIN = 1e-3
ORACLE_OMEGA_MIN = 1e-4
DEFAULT_LEVELS = 3
DEFAULT_GRID = 40
DEFAULT_ORACLE_POINTS = 40
DEFAULT_TOL = 1e-12
DEFAULT_F_VALID = 0.01
DEFAULT_E1 = -1.0
MIN_ORACLE_POINTS = 12


class Command(str, Enum):
    SPECTRUM = "spectrum"
    SCAN = "scan"
    ORDINARY = "ordinary"
    ORACLE = "oracle"
    VALIDATE = "validate"
    RUNS = "runs"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class SolverChoice(str, Enum):
    AUTO = "auto"
    EXACT = "exact"
    GENERAL = "general"
    ASYMPTOTIC = "asymptotic"


class OrdinaryMode(str, Enum):
    ORTHOGONALITY = "orthogonality"
    CUTOFF = "cutoff"


@dataclass(frozen=True)
class RunConfig:
    command: Command
    kappa: float = 0.75
    beta: Optional[float] = None
    beta_prime: Optional[float] = None
    equal_betas: bool = False
    mass: Optional[float] = None
    omega_min: float = DEFAULT_OMEGA_MIN
    omega_max: float = DEFAULT_OMEGA_MAX
    levels: int = DEFAULT_LEVELS
    n_lo: int = 0
    n_hi: int = 5
    e1: float = DEFAULT_E1
    cutoff: Optional[float] = None
    mode: OrdinaryMode = OrdinaryMode.ORTHOGONALITY
    method: SolverChoice = SolverChoice.AUTO
    f_valid: float = DEFAULT_F_VALID
    tol: float = DEFAULT_TOL
    grid: int = DEFAULT_GRID
    oracle_points: int = DEFAULT_ORACLE_POINTS
    skip_oracle: bool = False
    for_command: Optional[Command] = None
    reset_runs: bool = False
    output_path: Optional[str] = None
    format: OutputFormat = OutputFormat.CSV
    threads: Optional[int] = None
    timestamp: bool = True
    run_log: Optional[str] = None
    log_level: str = "WARNING"

    def __post_init__(self) -> None:
        for name, kind in (
            ("command", Command),
            ("mode", OrdinaryMode),
            ("method", SolverChoice),
            ("format", OutputFormat),
        ):
            try:
                object.__setattr__(self, name, kind(getattr(self, name)))
            except ValueError as exc:
                raise ConfigError(f"invalid {name}: {getattr(self, name)!r}") from exc
        if self.for_command is not None:
            try:
                object.__setattr__(self, "for_command", Command(self.for_command))
            except ValueError as exc:
                raise ConfigError(f"invalid for_command: {self.for_command!r}") from exc
        object.__setattr__(self, "log_level", str(self.log_level).upper())
        self._validate()

    def _validate(self) -> None:
        if not (math.isfinite(self.kappa) and self.kappa > 0.0):
            raise ConfigError(f"--kappa must be positive, got {self.kappa}")
        for name in ("beta", "beta_prime"):
            value = getattr(self, name)
            if value is not None and not (math.isfinite(value) and value >= 0.0):
                raise ConfigError(f"--{name.replace('_', '-')} must be non-negative, got {value}")
        if self.equal_betas and None not in (self.beta, self.beta_prime) and self.beta != self.beta_prime:
            raise ConfigError(f"--equal-betas conflicts with beta={self.beta}, beta'={self.beta_prime}")
        if not self.deformation.is_deformed:
            raise ConfigError("beta + beta' must be positive")
        if self.mass is not None and not self.mass > 0.0:
            raise ConfigError(f"--mass must be positive, got {self.mass}")
        if not 0.0 < self.omega_min < self.omega_max < 0.5:
            raise ConfigError(
                f"omega window must satisfy 0 < omega_min < omega_max < 1/2, got ({self.omega_min}, {self.omega_max})"
            )
        if self.levels < 1:
            raise ConfigError(f"--levels must be >= 1, got {self.levels}")
        if self.n_lo > self.n_hi:
            raise ConfigError(f"--n-lo must not exceed --n-hi, got ({self.n_lo}, {self.n_hi})")
        if not self.e1 < 0.0:
            raise ConfigError(f"--e1 must be negative, got {self.e1}")
        if self.cutoff is not None and not self.cutoff > 0.0:
            raise ConfigError(f"--cutoff must be positive, got {self.cutoff}")
        for name in ("tol", "f_valid"):
            if not getattr(self, name) > 0.0:
                raise ConfigError(f"--{name.replace('_', '-')} must be positive, got {getattr(self, name)}")
        if self.grid < 1:
            raise ConfigError(f"--grid must be >= 1, got {self.grid}")
        if self.oracle_points < MIN_ORACLE_POINTS:
            raise ConfigError(f"--oracle-points must be >= {MIN_ORACLE_POINTS}, got {self.oracle_points}")
        if self.threads is not None and self.threads < 1:
            raise ConfigError(f"thread count must be >= 1, got {self.threads}")
        if not isinstance(logging.getLevelName(self.log_level), int):
            raise ConfigError(f"unknown log level {self.log_level!r}")

        if self.command is Command.SPECTRUM and self.method is SolverChoice.ASYMPTOTIC and self.mass is None:
            raise ConfigError("the asymptotic spectrum needs --mass")
        if self.command is Command.ORDINARY and self.mode is OrdinaryMode.CUTOFF:
            if self.cutoff is None or self.mass is None:
                raise ConfigError("the cutoff spectrum needs --cutoff and --mass")
        if self.command is Command.RUNS and self.run_log is None:
            raise ConfigError(f"the runs command needs --run-log or {RUN_LOG_ENV}")
        if self.for_command is Command.RUNS:
            raise ConfigError("runs of the runs command are not recorded")

    @property
    def omega_window(self) -> Tuple[float, float]:
        return self.omega_min, self.omega_max

    @property
    def betas_given(self) -> bool:
        if self.equal_betas:
            return self.beta is not None or self.beta_prime is not None
        return self.beta is not None and self.beta_prime is not None

    @property
    def deformation(self) -> Deformation:
        """Explicit betas, with DEFAULT_BETA for any that are missing."""
        if self.equal_betas:
            beta = self.beta if self.beta is not None else self.beta_prime
            return Deformation.equal(DEFAULT_BETA if beta is None else beta)
        return Deformation(
            DEFAULT_BETA if self.beta is None else self.beta,
            DEFAULT_BETA if self.beta_prime is None else self.beta_prime,
        )

    @property
    def omega4(self) -> float:
        return 0.5 if self.equal_betas else self.deformation.omega4

    @property
    def uses_special_solver(self) -> bool:
        """beta = beta' exactly, so the hypergeometric condition applies."""
        return self.equal_betas or self.deformation.has_equal_betas

    def to_dict(self) -> Dict[str, Any]:
        """Plain, ordered mapping for output headers; the run log location is local state and left out."""
        data = asdict(self)
        data.pop("run_log")
        for key, value in data.items():
            if isinstance(value, Enum):
                data[key] = value.value
        return data


def _env_threads(env: Mapping[str, str]) -> Optional[int]:
    raw = env.get(THREADS_ENV, "").strip()
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigError(f"{THREADS_ENV} must be an integer, got {raw!r}") from exc


def _default_omega_min(command: Command) -> float:
    if command is Command.SCAN:
        return SCAN_OMEGA_MIN
    if command is Command.ORACLE:
        return ORACLE_OMEGA_MIN
    return DEFAULT_OMEGA_MIN


def build_config(args: Any, env: Mapping[str, str]) -> RunConfig:
    """
    Merge parsed arguments with the environment.

    Explicit flags win over ``MINLEN_THREADS``, ``MINLEN_LOG_LEVEL`` and
    ``MINLEN_RUN_LOG``; arguments a subcommand does not define keep the
    RunConfig defaults.
    """
    command = Command(args.command)

    def arg(name: str, default: Any = None) -> Any:
        value = getattr(args, name, None)
        return default if value is None else value

    threads = arg("threads", _env_threads(env))
    return RunConfig(
        command=command,
        kappa=arg("kappa", 0.75),
        beta=arg("beta"),
        beta_prime=arg("beta_prime"),
        equal_betas=bool(arg("equal_betas", False)),
        mass=arg("mass"),
        omega_min=arg("omega_min", _default_omega_min(command)),
        omega_max=arg("omega_max", DEFAULT_OMEGA_MAX),
        levels=arg("levels", DEFAULT_LEVELS),
        n_lo=arg("n_lo", 0),
        n_hi=arg("n_hi", 5),
        e1=arg("e1", DEFAULT_E1),
        cutoff=arg("cutoff"),
        mode=arg("mode", OrdinaryMode.ORTHOGONALITY),
        method=arg("method", SolverChoice.AUTO),
        f_valid=arg("f_valid", DEFAULT_F_VALID),
        tol=arg("tol", DEFAULT_TOL),
        grid=arg("grid", DEFAULT_GRID),
        oracle_points=arg("oracle_points", DEFAULT_ORACLE_POINTS),
        skip_oracle=bool(arg("skip_oracle", False)),
        for_command=arg("for_command"),
        reset_runs=bool(arg("reset", False)),
        output_path=arg("out"),
        format=arg("format", OutputFormat.CSV),
        threads=threads,
        timestamp=not bool(arg("no_timestamp", False)),
        run_log=arg("run_log", env.get(RUN_LOG_ENV) or None),
        log_level=arg("log_level", env.get(LOG_LEVEL_ENV) or "WARNING"),
    )


__all__ = [
    "DEFAULT_BETA",
    "Command",
    "OutputFormat",
    "SolverChoice",
    "OrdinaryMode",
    "RunConfig",
    "build_config",
]
