"""
Ordered worker map for scans.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, TypeVar

T = TypeVar('T')
R = TypeVar('R')

logger = logging.getLogger(__name__)


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1, chunksize: int = 64) -> Iterator[R]:
    """
    Map func over items, yielding results in input order.

    Args:
        func: picklable callable (module-level function or functools.partial)
        items: work items
        workers: process count; 1 runs in the calling process
        chunksize: items handed to a worker at a time
    """
    if workers <= 1:
        yield from map(func, items)
        return
    logger.debug(f"Starting process pool with {workers} workers, chunksize {chunksize}")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(func, items, chunksize=chunksize)
