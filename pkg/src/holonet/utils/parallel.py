"""
Shared worker pool for internal parallelism.

The pool is created lazily and sized by HOLONET_THREADS.
"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from .settings import get_thread_count

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

# Global executor instance for lazy initialization
_executor: Optional[ThreadPoolExecutor] = None
_executor_lock = threading.Lock()


def get_executor() -> ThreadPoolExecutor:
    """
    Get the shared executor using lazy initialization.

    Returns:
        ThreadPoolExecutor: Pool capped at HOLONET_THREADS workers

    Raises:
        ValueError: If HOLONET_THREADS is invalid
    """
    global _executor
    with _executor_lock:
        if _executor is None:
            workers = get_thread_count()
            logger.debug("Starting worker pool with %s threads", workers)
            _executor = ThreadPoolExecutor(max_workers=workers, thread_name_prefix="holonet")
        return _executor


def reset_executor() -> None:
    """
    Shut down and forget the shared executor.
    Useful for testing or when HOLONET_THREADS changes.
    """
    global _executor
    with _executor_lock:
        executor, _executor = _executor, None
    if executor is not None:
        executor.shutdown(wait=True)


def ordered_map(func: Callable[[T], R], items: Iterable[T]) -> List[R]:
    """Apply `func` to every item on the shared pool, returning results in input order."""
    items = list(items)
    if len(items) <= 1 or get_thread_count() == 1:
        return [func(item) for item in items]
    return list(get_executor().map(func, items))
