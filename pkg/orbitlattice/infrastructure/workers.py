import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from orbitlattice.config import get_threads

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """Applies *func* to every item and returns results in input order.

    Cells must be independent; with one thread this is a plain loop, so the
    output never depends on the worker count.
    """
    items = list(items)
    threads = threads or get_threads()
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    logger.debug("parallel_map: %d items on %d threads", len(items), threads)
    with ThreadPoolExecutor(max_workers=threads, thread_name_prefix="orbitlattice") as executor:
        return list(executor.map(func, items))
