from __future__ import annotations

import json
import os
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple
from uuid import uuid4

# Environment variable naming the JSON run log; unset means no run log
RUN_LOG_ENV = "MINLEN_RUN_LOG"

DEFAULT_RUN_LOG_FILE = Path("minlen_runs.json")

RUN_STATUSES = ("RUNNING", "SUCCESS", "FAILED", "CHECKS_FAILED")


def _now_utc_iso() -> str:
    """Return current UTC time in ISO 8601 format."""
    return datetime.now(timezone.utc).isoformat()


def resolve_run_log(path: Optional[Path | str] = None) -> Path:
    """Explicit path, then ``MINLEN_RUN_LOG``, then ``minlen_runs.json`` in the CWD."""
    if path is not None:
        return Path(path)
    env_value = os.getenv(RUN_LOG_ENV)
    if env_value:
        return Path(env_value)
    return DEFAULT_RUN_LOG_FILE


def _load_store(path: Optional[Path | str] = None) -> Dict[str, Any]:
    """
    Load the run log from its JSON file.

    Structure:
    {
      "runs": [
        {
          "run_id": str,
          "command": str,
          "start_ts": str,
          "end_ts": Optional[str],
          "status": str,
          "rows_written": Optional[int],
          "output_location": Optional[str],
          "error_message": Optional[str]
        },
        ...
      ],
      "checkpoints": {
        "<command>": "<last output location>"
      }
    }
    """
    file = resolve_run_log(path)
    if not file.exists():
        return {"runs": [], "checkpoints": {}}

    with file.open("r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise RuntimeError(f"Run log {file} is corrupted") from exc

    if not isinstance(data, dict):
        raise RuntimeError(f"Run log {file} has invalid format (expected object)")

    data.setdefault("runs", [])
    data.setdefault("checkpoints", {})
    if not isinstance(data["runs"], list) or not isinstance(data["checkpoints"], dict):
        raise RuntimeError(f"Run log {file} has invalid structure")

    return data


def _save_store(store: Dict[str, Any], path: Optional[Path | str] = None) -> None:
    """Persist the run log atomically."""
    file = resolve_run_log(path)
    file.parent.mkdir(parents=True, exist_ok=True)

    tmp_path = file.with_suffix(file.suffix + ".tmp")
    with tmp_path.open("w", encoding="utf-8") as f:
        json.dump(store, f, indent=2, ensure_ascii=False)

    tmp_path.replace(file)


def start_run(command: str, path: Optional[Path | str] = None) -> str:
    """
    Register the start of a CLI command.

    Returns
    -------
    run_id:
        Identifier of the created run, to be passed to end_run().
    """
    store = _load_store(path)

    run_id = str(uuid4())
    store["runs"].append(
        {
            "run_id": run_id,
            "command": command,
            "start_ts": _now_utc_iso(),
            "end_ts": None,
            "status": "RUNNING",
            "rows_written": None,
            "output_location": None,
            "error_message": None,
        }
    )
    _save_store(store, path)
    return run_id


def end_run(
    run_id: str,
    status: str = "SUCCESS",
    *,
    rows_written: Optional[int] = None,
    output_location: Optional[str] = None,
    error_message: Optional[str] = None,
    path: Optional[Path | str] = None,
) -> Dict[str, Any]:
    """
    Register the end of a command run.

    Parameters
    ----------
    status:
        One of "SUCCESS", "FAILED" or "CHECKS_FAILED" (validation ran but a
        check did not pass).
    rows_written:
        Number of result rows the command emitted.
    output_location:
        Where the output went; also stored as the command's checkpoint.

    Returns
    -------
    run_record:
        The updated record.
    """
    if status not in RUN_STATUSES:
        raise ValueError(f"unknown run status {status!r}")
    store = _load_store(path)
    runs: List[Dict[str, Any]] = store.get("runs", [])

    target_run: Optional[Dict[str, Any]] = None
    for run in reversed(runs):
        if run.get("run_id") == run_id:
            target_run = run
            break

    if target_run is None:
        raise KeyError(f"No run found with id={run_id!r}")

    target_run["end_ts"] = _now_utc_iso()
    target_run["status"] = status

    if rows_written is not None:
        target_run["rows_written"] = int(rows_written)
    if output_location is not None:
        target_run["output_location"] = str(output_location)
        save_checkpoint(target_run["command"], str(output_location), _store=store)
    if error_message is not None:
        target_run["error_message"] = error_message

    _save_store(store, path)
    return target_run


def save_checkpoint(
    command: str,
    value: Any,
    _store: Optional[Dict[str, Any]] = None,
    path: Optional[Path | str] = None,
) -> None:
    """Remember the last output of a command."""
    store = _load_store(path) if _store is None else _store
    store.setdefault("checkpoints", {})[command] = value
    if _store is None:
        _save_store(store, path)


def load_checkpoint(command: str, default: Optional[Any] = None, path: Optional[Path | str] = None) -> Any:
    return _load_store(path).get("checkpoints", {}).get(command, default)


def get_last_run(command: Optional[str] = None, path: Optional[Path | str] = None) -> Optional[Dict[str, Any]]:
    runs = list_runs(command, path)
    return runs[-1] if runs else None


def list_runs(command: Optional[str] = None, path: Optional[Path | str] = None) -> List[Dict[str, Any]]:
    """List recorded runs in start order, optionally filtered by command."""
    runs: List[Dict[str, Any]] = _load_store(path).get("runs", [])
    if command is None:
        return list(runs)
    return [r for r in runs if r.get("command") == command]


def reset_run_log(path: Optional[Path | str] = None) -> Tuple[int, int]:
    """
    Clear all runs and checkpoints.

    Returns
    -------
    (runs_cleared, checkpoints_cleared)
    """
    store = _load_store(path)
    counts = len(store.get("runs", [])), len(store.get("checkpoints", {}))
    _save_store({"runs": [], "checkpoints": {}}, path)
    return counts
