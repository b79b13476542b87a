"""
Command-line entrypoint.

    PYTHONPATH=src python -m cli spectrum --kappa 0.75 --equal-betas
    PYTHONPATH=src python -m cli scan --kappa 2 --equal-betas --out scan_kappa_2.csv
    PYTHONPATH=src python -m cli validate --no-timestamp --format json

Exit codes: 0 success, 1 a check failed, 2 invalid configuration,
3 solver failure.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import List, Optional

from common.errors import ConfigError, MinlenError
from env_loader import load_dotenv_if_present

from .commands import run_command
from .config import Command, OrdinaryMode, OutputFormat, SolverChoice, build_config

EXIT_CONFIG = 2
EXIT_SOLVER = 3


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=[f.value for f in OutputFormat], default=None)
    p.add_argument("--out", default=None, help="Output file (default: stdout)")
    p.add_argument("--no-timestamp", action="store_true", help="Omit the timestamp for byte-identical output")
    p.add_argument("--threads", type=int, default=None, help="Worker threads (default: MINLEN_THREADS or 1)")
    p.add_argument("--run-log", default=None, help="JSON run log (default: MINLEN_RUN_LOG, unset = none)")
    p.add_argument("--log-level", default=None, help="Logging level (default: MINLEN_LOG_LEVEL or WARNING)")


def _add_physics(p: argparse.ArgumentParser, *, window: bool = True) -> None:
    p.add_argument("--kappa", type=float, default=None, help="Dimensionless coupling m alpha / 2 hbar^2")
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--beta-prime", type=float, default=None)
    p.add_argument("--equal-betas", action="store_true", help="beta = beta': use the exact hypergeometric solver")
    p.add_argument("--mass", type=float, default=None)
    if window:
        p.add_argument("--omega-min", type=float, default=None)
        p.add_argument("--omega-max", type=float, default=None)
        p.add_argument("--levels", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cli",
        description="Bound states of the inverse-square potential with and without a minimal length.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_spec = sub.add_parser(Command.SPECTRUM.value, help="Bound-state levels omega_n (and E_n)")
    _add_physics(p_spec)
    p_spec.add_argument("--method", choices=[m.value for m in SolverChoice], default=None)
    p_spec.add_argument("--n-lo", type=int, default=None)
    p_spec.add_argument("--n-hi", type=int, default=None)
    p_spec.add_argument("--f-valid", type=float, default=None, help="Validity filter of the asymptotic levels")
    p_spec.add_argument("--tol", type=float, default=None, help="Root tolerance in ln(omega)")
    p_spec.add_argument("--grid", type=int, default=None, help="Root-bracketing points per decade")
    _add_common(p_spec)

    p_scan = sub.add_parser(Command.SCAN.value, help="Quantization function on a log grid in omega")
    _add_physics(p_scan)
    p_scan.add_argument("--grid", type=int, default=None, help="Points per decade")
    _add_common(p_scan)

    p_ord = sub.add_parser(Command.ORDINARY.value, help="Orthogonality or cutoff spectrum without deformation")
    p_ord.add_argument("--kappa", type=float, default=None)
    p_ord.add_argument("--mode", choices=[m.value for m in OrdinaryMode], default=None)
    p_ord.add_argument("--e1", type=float, default=None, help="Reference energy of level 0 (orthogonality)")
    p_ord.add_argument("--cutoff", type=float, default=None, help="Momentum cutoff Lambda")
    p_ord.add_argument("--mass", type=float, default=None)
    p_ord.add_argument("--n-lo", type=int, default=None)
    p_ord.add_argument("--n-hi", type=int, default=None)
    p_ord.add_argument("--f-valid", type=float, default=None)
    _add_common(p_ord)

    p_orc = sub.add_parser(Command.ORACLE.value, help="Nystrom crossings against the primary solvers")
    _add_physics(p_orc)
    p_orc.add_argument("--oracle-points", type=int, default=None, help="Nystrom nodes per decade")
    _add_common(p_orc)

    p_val = sub.add_parser(Command.VALIDATE.value, help="Run every consistency check")
    _add_physics(p_val)
    p_val.add_argument("--n-lo", type=int, default=None)
    p_val.add_argument("--n-hi", type=int, default=None)
    p_val.add_argument("--f-valid", type=float, default=None)
    p_val.add_argument("--oracle-points", type=int, default=None)
    p_val.add_argument("--skip-oracle", action="store_true")
    _add_common(p_val)

    p_runs = sub.add_parser(Command.RUNS.value, help="List recorded runs")
    p_runs.add_argument(
        "--for-command",
        choices=[c.value for c in Command if c is not Command.RUNS],
        default=None,
        help="Only runs of this command",
    )
    p_runs.add_argument("--reset", action="store_true", help="Clear the run log")
    _add_common(p_runs)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv_if_present()
    args = build_parser().parse_args(argv)
    try:
        cfg = build_config(args, os.environ)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    logging.basicConfig(
        level=cfg.log_level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return run_command(cfg)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except MinlenError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    raise SystemExit(main())
