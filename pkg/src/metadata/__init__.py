"""
Metadata module
---------------

Local JSON run log for CLI commands: one record per command run (status,
rows written, output location) plus the last output per command.

Usage:

    from metadata import start_run, end_run, list_runs

    run_id = start_run("spectrum", path="runs.json")
    # ... run the command ...
    end_run(run_id, status="SUCCESS", rows_written=3, output_location="out/levels.csv", path="runs.json")

Without an explicit path the file named by ``MINLEN_RUN_LOG`` is used.
"""

from .store import (
    DEFAULT_RUN_LOG_FILE,
    RUN_LOG_ENV,
    RUN_STATUSES,
    end_run,
    get_last_run,
    list_runs,
    load_checkpoint,
    reset_run_log,
    resolve_run_log,
    save_checkpoint,
    start_run,
)

__all__ = [
    "DEFAULT_RUN_LOG_FILE",
    "RUN_LOG_ENV",
    "RUN_STATUSES",
    "resolve_run_log",
    "start_run",
    "end_run",
    "save_checkpoint",
    "load_checkpoint",
    "get_last_run",
    "list_runs",
    "reset_run_log",
]
