from __future__ import annotations

import os
from pathlib import Path

LOG_LEVEL_ENV = "MINLEN_LOG_LEVEL"
RUN_LOG_ENV = "MINLEN_RUN_LOG"


def load_dotenv_if_present(path: str | Path | None = None) -> list[str]:
    """
    Load KEY=VALUE pairs from a ``.env`` file (default: ``.env`` in the CWD).

    - Empty lines and lines starting with "#" are skipped, as are lines
      without "=".
    - Surrounding single or double quotes around the value are removed.
    - Variables already present in ``os.environ`` are never overwritten,
      so an explicit ``MINLEN_THREADS=4 python -m cli ...`` wins.

    Returns the keys that were set. A missing or unreadable file is not an
    error.
    """
    env_path = Path(path or ".env")
    if not env_path.exists():
        return []

    try:
        text = env_path.read_text(encoding="utf-8")
    except OSError:
        return []

    loaded: list[str] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#") or "=" not in line:
            continue
        key, value = line.split("=", 1)
        key = key.strip()
        value = value.strip()
        if len(value) >= 2 and value[0] == value[-1] and value[0] in "'\"":
            value = value[1:-1]
        if not key or key in os.environ:
            continue
        os.environ[key] = value
        loaded.append(key)
    return loaded


__all__ = ["LOG_LEVEL_ENV", "RUN_LOG_ENV", "load_dotenv_if_present"]
