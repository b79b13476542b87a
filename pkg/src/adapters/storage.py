from __future__ import annotations

import io
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Iterable

import pandas as pd

CSV_FLOAT_FORMAT = "%.17g"


def table_to_csv(df: pd.DataFrame, header_lines: Iterable[str] = ()) -> str:
    """
    CSV text with "# " metadata lines on top.

    Floats are written with 17 significant digits so they round-trip.
    """
    buffer = io.StringIO()
    for line in header_lines:
        buffer.write(f"# {line}\n")
    df.to_csv(buffer, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue()


class StorageAdapter(ABC):
    """
    Abstraction over where command outputs are written.

    Keys are logical, slash-separated names such as "spectra/kappa_0.75.csv";
    implementations map them to physical locations.
    """

    @abstractmethod
    def write_text(self, key: str, text: str) -> str:
        """
        Persist text at the given key.

        Returns the location string used for logging and the run log.
        """

    def write_table(self, df: pd.DataFrame, key: str, header_lines: Iterable[str] = ()) -> str:
        """Persist a DataFrame as CSV (see ``table_to_csv``)."""
        return self.write_text(key, table_to_csv(df, header_lines))


class LocalStorageAdapter(StorageAdapter):
    """
    Local filesystem-backed storage adapter.

    Keys are treated as relative paths under a root directory; absolute
    keys are used as they are.
    Example:
        root_dir = Path("results")
        key      = "scan/kappa_2.csv"
        -> actual path: ./results/scan/kappa_2.csv
    """

    def __init__(self, root_dir: Path | str = ".") -> None:
        self.root_dir = Path(root_dir)

    def _resolve(self, key: str) -> Path:
        path = self.root_dir / key
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    def write_text(self, key: str, text: str) -> str:
        path = self._resolve(key)
        with path.open("w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        return str(path)


__all__ = ["CSV_FLOAT_FORMAT", "table_to_csv", "StorageAdapter", "LocalStorageAdapter"]
