"""
Adapters package
----------------

Abstractions for output files and the run log, so the CLI writes results
and records runs through one interface.
"""

from .storage import (  # noqa: F401
    CSV_FLOAT_FORMAT,
    LocalStorageAdapter,
    StorageAdapter,
    table_to_csv,
)
from .metadata import (  # noqa: F401
    LocalRunLogAdapter,
    NullRunLogAdapter,
    RunLogAdapter,
)

__all__ = [
    "CSV_FLOAT_FORMAT",
    "table_to_csv",
    "StorageAdapter",
    "LocalStorageAdapter",
    "RunLogAdapter",
    "LocalRunLogAdapter",
    "NullRunLogAdapter",
]
