from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from .errors import ConfigError

THREADS_ENV = "MINLEN_THREADS"

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(explicit: Optional[int] = None) -> int:
    """
    Number of worker threads for grid scans.

    An explicit value wins; otherwise ``MINLEN_THREADS`` is read, and the
    default is a single (serial) worker.
    """
    if explicit is not None:
        value = explicit
    else:
        raw = os.getenv(THREADS_ENV, "").strip()
        if not raw:
            return 1
        try:
            value = int(raw)
        except ValueError as exc:
            raise ConfigError(f"{THREADS_ENV} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ConfigError(f"worker count must be >= 1, got {value}")
    return value


def ordered_map(
    fn: Callable[[T], R],
    items: Iterable[T],
    workers: Optional[int] = None,
) -> List[R]:
    """
    Apply ``fn`` to every item and return the results in input order.

    The result never depends on the worker count: the pool only changes
    the schedule, ``Executor.map`` restores the ordering.
    """
    items = list(items)
    n_workers = resolve_workers(workers)
    if n_workers == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(n_workers, len(items))) as pool:
        return list(pool.map(fn, items))


__all__ = ["THREADS_ENV", "resolve_workers", "ordered_map"]
