from __future__ import annotations

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from metadata import (  # type: ignore
    end_run as local_end_run,
    get_last_run as local_get_last_run,
    list_runs as local_list_runs,
    load_checkpoint as local_load_checkpoint,
    reset_run_log as local_reset_run_log,
    start_run as local_start_run,
)


class RunLogAdapter(ABC):
    """
    Abstraction over the record of CLI runs.
    """

    @abstractmethod
    def start_run(self, command: str) -> str:
        """Register the start of a command and return its run id."""

    @abstractmethod
    def end_run(
        self,
        run_id: str,
        status: str = "SUCCESS",
        *,
        rows_written: Optional[int] = None,
        output_location: Optional[str] = None,
        error_message: Optional[str] = None,
    ) -> Dict[str, Any]:
        """Mark a run as finished and persist its final state."""

    @abstractmethod
    def last_output(self, command: str) -> Optional[str]:
        """Output location of the last finished run of a command."""

    @abstractmethod
    def last_run(self, command: Optional[str] = None) -> Optional[Dict[str, Any]]:
        """Most recently started run, optionally of one command."""

    @abstractmethod
    def list_runs(self, command: Optional[str] = None) -> List[Dict[str, Any]]:
        """List runs, optionally filtered by command."""

    @abstractmethod
    def reset(self) -> Tuple[int, int]:
        """Clear the log; returns (runs_cleared, last_outputs_cleared)."""


class LocalRunLogAdapter(RunLogAdapter):
    """
    Adapter backed by the JSON run log in `src/metadata`, pinned to one file.
    """

    def __init__(self, path: Path | str) -> None:
        self.path = Path(path)

    def start_run(self, command: str) -> str:
        return local_start_run(command, path=self.path)

    def end_run(
        self,
        run_id: str,
        status: str = "SUCCESS",
        *,
        rows_written: Optional[int] = None,
        output_location: Optional[str] = None,
        error_message: Optional[str] = None,
    ) -> Dict[str, Any]:
        return local_end_run(
            run_id,
            status=status,
            rows_written=rows_written,
            output_location=output_location,
            error_message=error_message,
            path=self.path,
        )

    def last_output(self, command: str) -> Optional[str]:
        return local_load_checkpoint(command, path=self.path)

    def last_run(self, command: Optional[str] = None) -> Optional[Dict[str, Any]]:
        return local_get_last_run(command, path=self.path)

    def list_runs(self, command: Optional[str] = None) -> List[Dict[str, Any]]:
        return local_list_runs(command, path=self.path)

    def reset(self) -> Tuple[int, int]:
        return local_reset_run_log(path=self.path)


class NullRunLogAdapter(RunLogAdapter):
    """Used when no run log is configured: records nothing."""

    def start_run(self, command: str) -> str:
        return ""

    def end_run(self, run_id: str, status: str = "SUCCESS", **_: Any) -> Dict[str, Any]:
        return {}

    def last_output(self, command: str) -> Optional[str]:
        return None

    def last_run(self, command: Optional[str] = None) -> Optional[Dict[str, Any]]:
        return None

    def list_runs(self, command: Optional[str] = None) -> List[Dict[str, Any]]:
        return []

    def reset(self) -> Tuple[int, int]:
        return 0, 0


__all__ = ["RunLogAdapter", "LocalRunLogAdapter", "NullRunLogAdapter"]
