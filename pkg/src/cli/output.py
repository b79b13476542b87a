"""
Result files.

CSV: ``# key=value`` metadata lines (schema version first, then the run
configuration and command-specific facts) followed by the table, floats
with 17 significant digits. JSON: one ``{config, results, checks}``
object with sorted keys. Both are byte-identical for identical
configurations unless the timestamp is enabled.
"""

from __future__ import annotations

import json
import math
import sys
from datetime import datetime, timezone
from typing import Any, Dict, List, Mapping, Optional

import numpy as np
import pandas as pd

from adapters import StorageAdapter, table_to_csv

from .config import OutputFormat, RunConfig

SCHEMA_VERSION = 1
STDOUT_LOCATION = "<stdout>"


def _plain(value: Any) -> Any:
    """JSON-safe scalar: numpy types unwrapped, non-finite floats as null."""
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _header_value(value: Any) -> str:
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return ";".join(_header_value(v) for v in value)
    return str(value)


def header_lines(cfg: RunConfig, extra: Mapping[str, Any], timestamp: Optional[str]) -> List[str]:
    lines = [f"schema={SCHEMA_VERSION}"]
    lines += [f"{key}={_header_value(value)}" for key, value in cfg.to_dict().items()]
    lines += [f"{key}={_header_value(value)}" for key, value in extra.items()]
    if timestamp is not None:
        lines.append(f"timestamp={timestamp}")
    return lines


def render_json(
    cfg: RunConfig,
    frame: pd.DataFrame,
    checks: List[Dict[str, Any]],
    extra: Mapping[str, Any],
    timestamp: Optional[str],
) -> str:
    payload: Dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "config": _plain(cfg.to_dict()),
        "results": [_plain(row) for row in frame.to_dict(orient="records")],
        "checks": _plain(checks),
        "meta": _plain(dict(extra)),
    }
    if timestamp is not None:
        payload["timestamp"] = timestamp
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_output(
    cfg: RunConfig,
    frame: pd.DataFrame,
    checks: List[Dict[str, Any]],
    extra: Mapping[str, Any],
    storage: StorageAdapter,
) -> str:
    """
    Write the command result to ``cfg.output_path`` or stdout.

    In CSV the table is ``frame``; a command without rows but with checks
    (``validate``) writes the checks as its table.
    """
    timestamp = datetime.now(timezone.utc).isoformat() if cfg.timestamp else None
    if cfg.format is OutputFormat.JSON:
        text = render_json(cfg, frame, checks, extra, timestamp)
        if cfg.output_path is not None:
            return storage.write_text(cfg.output_path, text)
    else:
        table = frame if (len(frame.columns) or not checks) else pd.DataFrame(checks)
        lines = header_lines(cfg, extra, timestamp)
        if cfg.output_path is not None:
            return storage.write_table(table, cfg.output_path, lines)
        text = table_to_csv(table, lines)

    sys.stdout.write(text)
    sys.stdout.flush()
    return STDOUT_LOCATION


__all__ = ["SCHEMA_VERSION", "STDOUT_LOCATION", "header_lines", "render_json", "write_output"]
