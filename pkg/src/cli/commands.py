"""
Command implementations.

Each ``cmd_*`` turns a RunConfig into a ``CommandOutcome`` (result table,
checks, header facts); ``run_command`` writes it, records the run in the
run log and maps the outcome to an exit code.
"""

from __future__ import annotations

import logging
import math
import sys
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, List

import numpy as np
import pandas as pd

from adapters import LocalRunLogAdapter, LocalStorageAdapter, NullRunLogAdapter, RunLogAdapter
from common.errors import MinlenError
from deformed_model import Deformation, energy_to_omega, omega_to_energy
from deformed_solver import (
    ScanMethod,
    asymptotic_omegas,
    asymptotic_spectrum,
    critical_coupling,
    find_spectrum_exact,
    find_spectrum_general,
    log_omega_grid,
    quantization_scan,
    validate_limits,
)
from integral_oracle import green_constant, green_kernel_deformed, log_grid, oracle_crossings
from integral_oracle.nystrom import DEFAULT_P_MAX, DEFAULT_P_MIN
from ordinary_qm import (
    CRITICAL_KAPPA,
    Coupling,
    SpectrumResult,
    cutoff_spectrum,
    green_kernel_flat,
    orthogonality_spectrum,
    scalar_product_closed,
    scalar_product_quadrature,
)

from .config import ORACLE_OMEGA_MIN, Command, OrdinaryMode, RunConfig, SolverChoice
from .output import write_output

logger = logging.getLogger(__name__)

CONSISTENCY_TOL = 1e-6
ORACLE_TOL = 1e-3
CRITICAL_TOL = 2e-3
ORTHOGONALITY_TOL = 1e-4
CUTOFF_EQUIVALENCE_TOL = 1e-10
ASYMPTOTIC_TOL = 0.05
ASYMPTOTIC_OMEGA_MAX = 0.02
KERNEL_LIMIT_TOL = 1e-6


@dataclass
class CommandOutcome:
    frame: pd.DataFrame
    checks: List[Dict[str, Any]] = field(default_factory=list)
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return any(not check["passed"] for check in self.checks)


def _check(name: str, passed: bool, value: float, tolerance: float, detail: str = "") -> Dict[str, Any]:
    return {
        "name": name,
        "passed": bool(passed),
        "value": float(value),
        "tolerance": float(tolerance),
        "detail": detail,
    }


def _skipped(name: str, reason: str) -> Dict[str, Any]:
    return _check(name, True, math.nan, math.nan, f"skipped: {reason}")


def _step(i: int, n: int, message: str) -> None:
    print(f"[{i}/{n}] {message}", file=sys.stderr)


def _max_relative(a, b) -> float:
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b) / np.abs(b)))


def _omega_frame(cfg: RunConfig, result: SpectrumResult) -> pd.DataFrame:
    """n, omega, [energy], method, residual; energies only when mass and betas were given."""
    frame = pd.DataFrame({"n": list(result.indices), "omega": list(result.levels)})
    if cfg.mass is not None and cfg.betas_given:
        d = cfg.deformation
        frame["energy"] = [omega_to_energy(d, cfg.mass, w) for w in result.levels]
    frame["method"] = result.method.value
    frame["residual"] = list(result.residuals) if result.residuals else math.nan
    return frame


def cmd_spectrum(cfg: RunConfig) -> CommandOutcome:
    d = cfg.deformation
    extra: Dict[str, Any] = {"omega4": cfg.omega4}
    checks: List[Dict[str, Any]] = []

    if cfg.method is SolverChoice.ASYMPTOTIC:
        _step(1, 1, f"asymptotic spectrum for kappa={cfg.kappa:g}")
        if cfg.kappa <= CRITICAL_KAPPA:
            return CommandOutcome(pd.DataFrame(columns=["n", "energy", "omega", "method"]), extra=extra)
        result = asymptotic_spectrum(cfg.kappa, d, cfg.mass, cfg.n_lo, cfg.n_hi, cfg.f_valid)
        frame = pd.DataFrame({"n": list(result.indices), "energy": list(result.levels)})
        frame["omega"] = [energy_to_omega(d, cfg.mass, e) for e in result.levels]
        frame["method"] = result.method.value
        extra["level_ratio"] = Coupling(cfg.kappa).level_ratio
        return CommandOutcome(frame, extra=extra)

    window = dict(
        omega_min=cfg.omega_min,
        omega_max=cfg.omega_max,
        max_levels=cfg.levels,
        points_per_decade=cfg.grid,
        xtol=cfg.tol,
        workers=cfg.threads,
    )
    exact_path = cfg.method is SolverChoice.EXACT or (cfg.method is SolverChoice.AUTO and cfg.equal_betas)
    if exact_path:
        if not cfg.uses_special_solver:
            logger.warning("exact solver requested for omega4=%g; it solves beta = beta'", cfg.omega4)
        _step(1, 1, f"hypergeometric levels for kappa={cfg.kappa:g}")
        result = find_spectrum_exact(cfg.kappa, **window)
        return CommandOutcome(_omega_frame(cfg, result), extra=extra)

    n_steps = 2 if d.has_equal_betas else 1
    _step(1, n_steps, f"shooting levels for kappa={cfg.kappa:g}, omega4={d.omega4:g}")
    result = find_spectrum_general(cfg.kappa, d, **window)
    if d.has_equal_betas:
        _step(2, n_steps, "equal-beta consistency against the hypergeometric levels")
        exact = find_spectrum_exact(cfg.kappa, **window)
        n = min(len(exact), len(result))
        deviation = _max_relative(result.levels[:n], exact.levels[:n])
        passed = len(exact) == len(result) and deviation < CONSISTENCY_TOL
        if not passed:
            logger.warning("shooting and hypergeometric levels disagree by %.3g", deviation)
        checks.append(_check("equal_beta_consistency", passed, deviation, CONSISTENCY_TOL, f"{n} levels"))
    return CommandOutcome(_omega_frame(cfg, result), checks, extra)


def cmd_scan(cfg: RunConfig) -> CommandOutcome:
    omegas = log_omega_grid(cfg.omega_min, cfg.omega_max, cfg.grid)
    method = ScanMethod.HYPERGEOMETRIC_EXACT if cfg.uses_special_solver else ScanMethod.SHOOTING_GENERAL
    omega4 = 0.5 if cfg.uses_special_solver else cfg.omega4
    _step(1, 1, f"{method.value} scan of {len(omegas)} points for kappa={cfg.kappa:g}")
    scan = quantization_scan(cfg.kappa, omegas, method=method, omega4=omega4, workers=cfg.threads)
    crossings = scan.sign_change_omegas()
    extra = {
        "scan_method": method.value,
        "omega4": omega4,
        "sign_changes": len(crossings),
        "sign_change_omegas": list(crossings),
    }
    return CommandOutcome(scan.to_frame(), extra=extra)


def cmd_ordinary(cfg: RunConfig) -> CommandOutcome:
    c = Coupling(cfg.kappa)
    extra: Dict[str, Any] = {"mode": cfg.mode.value}
    if not c.is_supercritical:
        logger.info("kappa=%g <= 1/16: no ordinary bound states", cfg.kappa)
        return CommandOutcome(pd.DataFrame(columns=["n", "energy", "method"]), extra=extra)
    _step(1, 1, f"{cfg.mode.value} spectrum for kappa={cfg.kappa:g}")
    if cfg.mode is OrdinaryMode.ORTHOGONALITY:
        result = orthogonality_spectrum(c, cfg.e1, cfg.n_lo, cfg.n_hi)
    else:
        result = cutoff_spectrum(c, cfg.cutoff, cfg.mass, cfg.n_lo, cfg.n_hi, cfg.f_valid)
    extra["level_ratio"] = c.level_ratio
    frame = pd.DataFrame({"n": list(result.indices), "energy": list(result.levels)})
    frame["method"] = result.method.value
    return CommandOutcome(frame, extra=extra)


def _reference_levels(cfg: RunConfig, omega4: float, max_levels: int) -> SpectrumResult:
    window = dict(omega_min=cfg.omega_min, omega_max=cfg.omega_max, max_levels=max_levels, workers=cfg.threads)
    if abs(omega4 - 0.5) <= 1e-12:
        return find_spectrum_exact(cfg.kappa, **window)
    return find_spectrum_general(cfg.kappa, Deformation.from_omega4(1.0, omega4), **window)


def _oracle_check(cfg: RunConfig, omega4: float) -> tuple[pd.DataFrame, Dict[str, Any]]:
    grid = log_grid(DEFAULT_P_MIN, DEFAULT_P_MAX, cfg.oracle_points)
    oracle = oracle_crossings(
        cfg.kappa,
        omega4,
        cfg.levels,
        omega_min=cfg.omega_min,
        omega_max=cfg.omega_max,
        grid=grid,
        workers=cfg.threads,
    )
    reference = _reference_levels(cfg, omega4, cfg.levels)
    n = min(len(oracle), len(reference))
    frame = pd.DataFrame(
        {
            "n": list(range(n)),
            "omega_oracle": list(oracle.levels[:n]),
            "omega_reference": list(reference.levels[:n]),
        }
    )
    frame["relative_difference"] = (frame["omega_oracle"] / frame["omega_reference"] - 1.0).abs()
    frame["grid_shift"] = list(oracle.residuals[:n])
    deviation = float(frame["relative_difference"].max()) if n else 0.0
    passed = len(oracle) == len(reference) and deviation < ORACLE_TOL
    detail = f"{len(oracle)} oracle levels, {len(reference)} reference levels, reference {reference.method.value}"
    return frame, _check("oracle_equivalence", passed, deviation, ORACLE_TOL, detail)


def cmd_oracle(cfg: RunConfig) -> CommandOutcome:
    omega4 = cfg.omega4
    if cfg.kappa <= CRITICAL_KAPPA:
        _step(1, 1, f"kappa={cfg.kappa:g} is subcritical: no crossings")
        return CommandOutcome(pd.DataFrame(columns=["n", "omega_oracle", "omega_reference"]), extra={"omega4": omega4})
    _step(1, 1, f"Nystrom crossings for kappa={cfg.kappa:g}, omega4={omega4:g}")
    frame, check = _oracle_check(cfg, omega4)
    return CommandOutcome(frame, [check], {"omega4": omega4, "oracle_points": cfg.oracle_points})


def _criticality_checks(cfg: RunConfig) -> List[Dict[str, Any]]:
    kappa_star = critical_coupling(cfg.deformation)
    deviation = abs(kappa_star - CRITICAL_KAPPA)
    if math.isclose(cfg.kappa, CRITICAL_KAPPA, rel_tol=1e-12):
        status = "critical: kappa = 1/16, boundary of the bound-state regime"
    elif cfg.kappa < CRITICAL_KAPPA:
        status = "subcritical: no bound states"
    else:
        status = "supercritical: infinitely many levels accumulating at omega = 0"
    return [
        _check("critical_coupling", deviation < CRITICAL_TOL, deviation, CRITICAL_TOL, f"kappa*={kappa_star!r}"),
        _check("criticality", True, cfg.kappa - CRITICAL_KAPPA, 0.0, status),
    ]


def _orthogonality_checks(c: Coupling) -> List[Dict[str, Any]]:
    k0 = 1.0
    k1 = k0 * math.exp(-math.pi / c.nu)
    norm = math.sqrt(scalar_product_closed(c, k0, k0) * scalar_product_closed(c, k1, k1))
    overlap = abs(scalar_product_quadrature(c, k0, k1)) / norm
    k2 = 1.7 * k0
    closed = scalar_product_closed(c, k0, k2)
    numeric = scalar_product_quadrature(c, k0, k2)
    mismatch = abs(numeric - closed) / abs(closed)
    return [
        _check("orthogonality_quadrature", overlap < ORTHOGONALITY_TOL, overlap, ORTHOGONALITY_TOL, "levels 0 and 1"),
        _check("scalar_product_closed_form", mismatch < ORTHOGONALITY_TOL, mismatch, ORTHOGONALITY_TOL, "k2/k1 = 1.7"),
    ]


def _cutoff_equivalence_check(cfg: RunConfig) -> Dict[str, Any]:
    d = cfg.deformation
    mass = cfg.mass or 1.0
    deformed = asymptotic_spectrum(cfg.kappa, d, mass, cfg.n_lo, cfg.n_hi, cfg.f_valid)
    cutoff = cutoff_spectrum(Coupling(cfg.kappa), 1.0 / math.sqrt(d.omega1), mass, cfg.n_lo, cfg.n_hi, cfg.f_valid)
    same_levels = deformed.indices == cutoff.indices
    deviation = _max_relative(deformed.levels, cutoff.levels) if same_levels else math.inf
    detail = f"{len(deformed)} levels, Lambda^2 = 1/(beta + beta')"
    return _check("cutoff_equivalence", same_levels and deviation < CUTOFF_EQUIVALENCE_TOL, deviation, CUTOFF_EQUIVALENCE_TOL, detail)


def _asymptotic_check(cfg: RunConfig) -> Dict[str, Any]:
    exact = find_spectrum_exact(cfg.kappa, omega_min=cfg.omega_min, max_levels=cfg.levels, workers=cfg.threads)
    predicted = asymptotic_omegas(cfg.kappa, 0, cfg.levels, f_valid=1.0)
    asymptotic = dict(zip(predicted.indices, predicted.levels))
    pairs = [(asymptotic[n], w) for n, w in zip(exact.indices, exact.levels) if w < ASYMPTOTIC_OMEGA_MAX]
    if not pairs:
        return _skipped("asymptotic_vs_exact", f"no exact level below omega={ASYMPTOTIC_OMEGA_MAX}")
    deviation = _max_relative([a for a, _ in pairs], [w for _, w in pairs])
    return _check("asymptotic_vs_exact", deviation < ASYMPTOTIC_TOL, deviation, ASYMPTOTIC_TOL, f"{len(pairs)} levels")


def _kernel_limit_check(omega4: float) -> Dict[str, Any]:
    d = Deformation.from_omega4(2e-16, omega4)
    momenta = np.geomspace(0.1, 10.0, 5)
    deviation = max(
        abs(green_kernel_deformed(d, p, q) - green_kernel_flat(p, q)) / green_kernel_flat(p, q)
        for p in momenta
        for q in momenta
    )
    detail = f"C/sqrt(omega1) = {green_constant(omega4)!r}"
    return _check("kernel_flat_limit", deviation < KERNEL_LIMIT_TOL, deviation, KERNEL_LIMIT_TOL, detail)


def cmd_validate(cfg: RunConfig) -> CommandOutcome:
    c = Coupling(cfg.kappa)
    d = cfg.deformation
    supercritical = c.is_supercritical
    n_steps = 7
    checks: List[Dict[str, Any]] = []

    _step(1, n_steps, "critical coupling")
    checks += _criticality_checks(cfg)

    _step(2, n_steps, "Green-function flat limit")
    checks.append(_kernel_limit_check(d.omega4))

    _step(3, n_steps, "ordinary orthogonality")
    if supercritical:
        checks += _orthogonality_checks(c)
    else:
        checks.append(_skipped("orthogonality_quadrature", "kappa <= 1/16"))

    _step(4, n_steps, "cutoff vs minimal-length spectrum")
    checks.append(_cutoff_equivalence_check(cfg) if supercritical else _skipped("cutoff_equivalence", "kappa <= 1/16"))

    _step(5, n_steps, "limit checks")
    if supercritical:
        report = validate_limits(cfg.kappa, d)
        checks += [
            _check(f"limit_{chk.name}", chk.passed, chk.value, chk.tolerance, chk.detail) for chk in report.checks
        ]
    else:
        checks.append(_skipped("limits", "kappa <= 1/16"))

    _step(6, n_steps, "asymptotic vs exact levels")
    checks.append(_asymptotic_check(cfg) if supercritical else _skipped("asymptotic_vs_exact", "kappa <= 1/16"))

    _step(7, n_steps, "integral-equation oracle")
    if cfg.skip_oracle:
        checks.append(_skipped("oracle_equivalence", "--skip-oracle"))
    elif not supercritical:
        checks.append(_skipped("oracle_equivalence", "kappa <= 1/16"))
    elif not d.has_equal_betas and not cfg.equal_betas:
        checks.append(_skipped("oracle_equivalence", "needs beta = beta' for the exact reference"))
    else:
        _, check = _oracle_check(_oracle_config(cfg), 0.5)
        checks.append(check)

    failed = sum(1 for check in checks if not check["passed"])
    return CommandOutcome(pd.DataFrame(), checks, {"checks_failed": failed, "omega4": d.omega4})


def _oracle_config(cfg: RunConfig) -> RunConfig:
    """The first two levels, in the window where the default Nystrom grid resolves them."""
    return replace(cfg, levels=min(cfg.levels, 2), omega_min=max(cfg.omega_min, ORACLE_OMEGA_MIN))


RUN_COLUMNS = ["run_id", "command", "status", "rows_written", "output_location", "start_ts", "end_ts", "error_message"]


def cmd_runs(cfg: RunConfig) -> CommandOutcome:
    """
    Recorded runs, optionally of one command, with the last output of every
    command seen; ``--reset`` clears the log instead.
    """
    log = LocalRunLogAdapter(cfg.run_log)
    if cfg.reset_runs:
        runs_cleared, outputs_cleared = log.reset()
        logger.info("cleared %d runs and %d last outputs from %s", runs_cleared, outputs_cleared, cfg.run_log)
        extra = {"runs_cleared": runs_cleared, "last_outputs_cleared": outputs_cleared}
        return CommandOutcome(pd.DataFrame(columns=RUN_COLUMNS), extra=extra)

    command = cfg.for_command.value if cfg.for_command is not None else None
    runs = log.list_runs(command)
    frame = pd.DataFrame([{key: run.get(key) for key in RUN_COLUMNS} for run in runs], columns=RUN_COLUMNS)
    last = log.last_run(command)
    extra: Dict[str, Any] = {"runs": len(frame), "last_run_id": last["run_id"] if last else ""}
    for name in sorted(set(frame["command"])):
        location = log.last_output(name)
        if location is not None:
            extra[f"last_output_{name}"] = location
    return CommandOutcome(frame, extra=extra)


COMMANDS: Dict[Command, Callable[[RunConfig], CommandOutcome]] = {
    Command.SPECTRUM: cmd_spectrum,
    Command.SCAN: cmd_scan,
    Command.ORDINARY: cmd_ordinary,
    Command.ORACLE: cmd_oracle,
    Command.VALIDATE: cmd_validate,
    Command.RUNS: cmd_runs,
}


def _run_log(cfg: RunConfig) -> RunLogAdapter:
    if cfg.run_log is None or cfg.command is Command.RUNS:
        return NullRunLogAdapter()
    return LocalRunLogAdapter(cfg.run_log)


def run_command(cfg: RunConfig) -> int:
    """
    Execute one command end to end.

    Returns 0 on success and 1 when a check failed; solver and configuration
    errors propagate as ``MinlenError`` after the run log has been closed.
    """
    run_log = _run_log(cfg)
    run_id = run_log.start_run(cfg.command.value)
    try:
        outcome = COMMANDS[cfg.command](cfg)
        location = write_output(cfg, outcome.frame, outcome.checks, outcome.extra, LocalStorageAdapter())
    except MinlenError as exc:
        run_log.end_run(run_id, "FAILED", error_message=str(exc))
        raise

    rows = len(outcome.frame) if len(outcome.frame.columns) else len(outcome.checks)
    failed = [check["name"] for check in outcome.checks if not check["passed"]]
    status = "CHECKS_FAILED" if outcome.failed else "SUCCESS"
    run_log.end_run(
        run_id,
        status,
        rows_written=rows,
        output_location=location,
        error_message=f"failed checks: {', '.join(failed)}" if failed else None,
    )
    if failed:
        logger.warning("%d of %d checks failed: %s", len(failed), len(outcome.checks), ", ".join(failed))
        return 1
    return 0


__all__ = [
    "CommandOutcome",
    "COMMANDS",
    "cmd_spectrum",
    "cmd_scan",
    "cmd_ordinary",
    "cmd_oracle",
    "cmd_validate",
    "cmd_runs",
    "run_command",
]
