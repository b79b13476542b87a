"""
Command-line interface
----------------------

Spectra, quantization scans, oracle comparisons and validation reports as
CSV or JSON. Run with ``PYTHONPATH=src python -m cli <command>``.
"""

from .commands import COMMANDS, CommandOutcome, run_command  # noqa: F401
from .config import Command, OrdinaryMode, OutputFormat, RunConfig, SolverChoice, build_config  # noqa: F401

__all__ = [
    "COMMANDS",
    "CommandOutcome",
    "run_command",
    "Command",
    "OrdinaryMode",
    "OutputFormat",
    "RunConfig",
    "SolverChoice",
    "build_config",
]
