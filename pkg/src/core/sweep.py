"""
Order-preserving fan-out for enumeration and atlas sweeps.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from loguru import logger

from src.core.config import get_settings

T = TypeVar("T")
R = TypeVar("R")


def run_sweep(fn: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> List[R]:
    """
    Apply ``fn`` to every item; results come back in input order.

    ``fn`` must be a module-level function when ``workers > 1`` so the
    process pool can pickle it.
    """
    workers = workers if workers is not None else get_settings().enumeration.workers
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    logger.info(f"Sweeping {len(items)} partitions over {workers} processes")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
